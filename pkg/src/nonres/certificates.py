"""Exact Farkas alternative for resonant-flat incidence systems.

The question: does some nonzero nonnegative weighting of the resonant flats
give every hyperplane the same incidence-weighted sum?  Exactly one of two
certificates exists and both are cheap to re-verify:

* a lambda witness: nonnegative integers on the flats, not all zero, whose
  hyperplane sums are constant (the weighting exists), or
* a delta certificate: rational weights on the hyperplanes summing to zero
  whose sum over every resonant flat is strictly positive (it cannot exist).

Decided by a two-phase exact rational simplex with Bland's anti-cycling
rule on the normalized system {lambda >= 0, sum lambda = 1, M^T lambda = c}.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

__all__ = [
    "IncidenceMatrix",
    "LambdaWitness",
    "DeltaCertificate",
    "incidence_matrix",
    "decide_constant_combination",
    "verify_delta",
    "verify_lambda",
    "delta_for_hyperplane",
]


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 incidence of resonant flats (rows) against hyperplanes (columns)."""

    flats: tuple
    n_cols: int

    def __post_init__(self):
        if self.n_cols < 1:
            raise ValueError("incidence matrix needs at least one hyperplane column")
        for flat in self.flats:
            members = flat.members
            if not members:
                raise ValueError("incidence rows must be nonempty flats")
            if any(not 0 <= h < self.n_cols for h in members):
                raise ValueError("flat member out of column range")

    @property
    def n_rows(self):
        return len(self.flats)

    def entries(self):
        return [
            [1 if h in flat else 0 for h in range(self.n_cols)] for flat in self.flats
        ]

    def column_sums(self, weights):
        """M^T applied to flat weights: one incidence sum per hyperplane."""
        if len(weights) != self.n_rows:
            raise ValueError("weight count does not match flat rows")
        sums = [Fraction(0)] * self.n_cols
        for flat, w in zip(self.flats, weights):
            if w:
                for h in flat.members:
                    sums[h] += w
        return sums

    def row_sums(self, delta):
        """M applied to hyperplane weights: one sum per resonant flat."""
        if len(delta) != self.n_cols:
            raise ValueError("delta length does not match hyperplane columns")
        return [
            sum((delta[h] for h in flat.members), Fraction(0)) for flat in self.flats
        ]


@dataclass(frozen=True)
class LambdaWitness:
    """Nonzero natural weights on resonant flats with constant hyperplane sums."""

    values: tuple
    common_sum: int


@dataclass(frozen=True)
class DeltaCertificate:
    """Hyperplane weights with total zero and strictly positive flat sums."""

    values: tuple


def incidence_matrix(arrangement, flats):
    ordered = tuple(sorted(flats, key=lambda f: f.sort_key))
    return IncidenceMatrix(ordered, len(arrangement))


def _phase_one(rows, rhs):
    """Minimize the artificial sum for {Ax = b, x >= 0}, b >= 0, Bland's rule.

    Returns (optimal value, x restricted to original columns, duals y).
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    total = n + m
    T = []
    for i in range(m):
        row = [Fraction(v) for v in rows[i]]
        row.extend(Fraction(1) if j == i else Fraction(0) for j in range(m))
        row.append(Fraction(rhs[i]))
        T.append(row)
    basis = [n + i for i in range(m)]
    # reduced-cost row for phase-one costs (0 on original, 1 on artificials)
    cost = []
    for j in range(total + 1):
        col_sum = sum(T[i][j] for i in range(m))
        cj = Fraction(1) if n <= j < total else Fraction(0)
        cost.append(cj - col_sum)
    while True:
        enter = -1
        for j in range(total):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][total] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            raise ArithmeticError("phase-one objective unbounded below")
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], T[leave])]
        if cost[enter]:
            f = cost[enter]
            cost = [a - f * b for a, b in zip(cost, T[leave])]
        basis[leave] = enter
    value = -cost[total]
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = T[i][total]
    duals = [Fraction(1) - cost[n + i] for i in range(m)]
    return value, x, duals


def _scale_to_coprime_integers(values):
    mult = lcm(*(v.denominator for v in values)) if values else 1
    ints = [int(v * mult) for v in values]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints, Fraction(mult, g if g > 1 else 1)


def _margin_delta(matrix):
    """Feasible point of {sum delta = 0, flat sums >= 1} via a second LP.

    Fallback used only if the dual extraction ever produced a zero flat-sum;
    it re-solves for an explicit unit margin.
    """
    n = matrix.n_cols
    m = matrix.n_rows
    # variables: delta = p - q with p, q >= 0, then one slack per flat row
    width = 2 * n + m
    rows = [[0] * width for _ in range(1 + m)]
    rhs = [Fraction(0)] + [Fraction(1)] * m
    for j in range(n):
        rows[0][j] = 1
        rows[0][n + j] = -1
    for i, flat in enumerate(matrix.flats):
        for h in flat.members:
            rows[1 + i][h] = 1
            rows[1 + i][n + h] = -1
        rows[1 + i][2 * n + i] = -1
    value, x, _ = _phase_one(rows, rhs)
    if value != 0:
        raise ArithmeticError("margin system infeasible despite Farkas dual")
    return tuple(x[j] - x[n + j] for j in range(n))


def decide_constant_combination(matrix):
    """Farkas alternative for the incidence system; exactly one side returned.

    Feasible: a LambdaWitness scaled to coprime integers.  Infeasible: a
    DeltaCertificate extracted from the terminal phase-one duals (which carry
    a strictness margin equal to the positive phase-one value).
    """
    if matrix.n_cols < 1:
        raise ValueError("incidence matrix has no hyperplane columns")
    m = matrix.n_rows
    n = matrix.n_cols
    if m == 0:
        return DeltaCertificate((Fraction(0),) * n)
    # columns: one lambda per flat, then the split free constant c = c+ - c-
    rows = [[0] * (m + 2) for _ in range(1 + n)]
    rhs = [Fraction(1)] + [Fraction(0)] * n
    for j in range(m):
        rows[0][j] = 1
    for i, flat in enumerate(matrix.flats):
        for h in flat.members:
            rows[1 + h][i] = 1
    for h in range(n):
        rows[1 + h][m] = -1
        rows[1 + h][m + 1] = 1
    value, x, duals = _phase_one(rows, rhs)
    if value == 0:
        lam = x[:m]
        ints, _ = _scale_to_coprime_integers(lam)
        sums = matrix.column_sums([Fraction(v) for v in ints])
        common = sums[0]
        if any(s != common for s in sums):
            raise ArithmeticError("feasible lambda has non-constant sums")
        return LambdaWitness(tuple(ints), int(common))
    delta = tuple(-duals[1 + h] for h in range(n))
    flat_sums = matrix.row_sums(delta)
    if sum(delta) != 0 or any(s <= 0 for s in flat_sums):
        delta = _margin_delta(matrix)
    return DeltaCertificate(tuple(Fraction(d) for d in delta))


def verify_delta(arrangement, flats, delta):
    """Check a delta certificate against an arrangement and its resonant flats.

    Accepts iff the weights sum to zero and every flat sum is strictly
    positive; the zero certificate is accepted exactly when there are no
    resonant flats.  Returns (ok, reason).
    """
    values = tuple(Fraction(v) for v in delta.values)
    if len(values) != len(arrangement):
        raise ValueError(
            f"delta has {len(values)} entries for {len(arrangement)} hyperplanes"
        )
    total = sum(values, Fraction(0))
    if total != 0:
        return False, f"total weight {total} is not zero"
    for flat in flats:
        s = sum((values[h] for h in flat.members), Fraction(0))
        if s <= 0:
            names = ",".join(arrangement.label_of(h) for h in flat.members)
            return False, f"flat {{{names}}} has sum {s} <= 0"
    return True, "ok"


def verify_lambda(matrix, witness):
    """Check a lambda witness against an incidence matrix; returns (ok, reason)."""
    values = tuple(witness.values)
    if len(values) != matrix.n_rows:
        raise ValueError(
            f"lambda has {len(values)} entries for {matrix.n_rows} resonant flats"
        )
    if any(v < 0 for v in values):
        return False, "negative weight"
    if not any(values):
        return False, "identically zero"
    sums = matrix.column_sums([Fraction(v) for v in values])
    distinct = sorted(set(sums))
    if len(distinct) > 1:
        return False, f"hyperplane sums not constant: {[str(s) for s in distinct]}"
    if sums and sums[0] != witness.common_sum:
        return False, f"declared common sum {witness.common_sum} != {sums[0]}"
    return True, "ok"


def delta_for_hyperplane(arrangement, index):
    """The closed-form candidate: 1 - #A on the chosen hyperplane, 1 elsewhere.

    Its sum over a subset S is #S when the hyperplane misses S and #S - #A
    when it lies in S, so it passes verify_delta exactly when no resonant
    flat contains the hyperplane.
    """
    k = len(arrangement)
    if not 0 <= index < k:
        raise ValueError(f"hyperplane index {index} out of range")
    if k < 2:
        raise ValueError("needs at least two hyperplanes")
    values = [Fraction(1)] * k
    values[index] = Fraction(1 - k)
    return DeltaCertificate(tuple(values))
