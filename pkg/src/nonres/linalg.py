"""Exact linear algebra over the rationals.

Everything downstream (lattices, certificates, the oracle) reduces to exact
rank and nullspace computations, so these must never round.  Scalars are
``fractions.Fraction``; rank goes through the fraction-free integer kernel
after clearing denominators row by row.
"""

from fractions import Fraction
from math import gcd, lcm

from . import _kernels

__all__ = [
    "RatMatrix",
    "rat_rank",
    "nullspace",
    "parse_rational",
    "format_rational",
    "clear_row_denominators",
]


def parse_rational(text):
    """Parse ``"p"`` or ``"p/q"`` with the sign on the numerator.

    Raises ValueError for malformed strings, including a zero denominator.
    """
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if not sep:
        return Fraction(n)
    if den.startswith(("+", "-")):
        raise ValueError(f"malformed rational {text!r}: sign on the numerator only")
    try:
        d = int(den)
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if d == 0:
        raise ValueError(f"malformed rational {text!r}: zero denominator")
    return Fraction(n, d)


def format_rational(q):
    """Inverse of parse_rational; Fraction's str() already has the right shape."""
    return str(Fraction(q))


class RatMatrix:
    """A rectangular matrix of Fractions with value semantics."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged matrix")
        self.entries = rows

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"RatMatrix({[[str(x) for x in row] for row in self.entries]})"


def _as_rows(m):
    if isinstance(m, RatMatrix):
        return m.entries
    return [[Fraction(x) for x in row] for row in m]


def clear_row_denominators(row):
    """Scale a Fraction row to coprime integers (empty rows pass through)."""
    denoms = [x.denominator for x in row]
    mult = lcm(*denoms) if denoms else 1
    ints = [int(x * mult) for x in row]
    g = gcd(*ints) if ints else 0
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def rat_rank(m):
    """Rank over the rationals via fraction-free elimination."""
    rows = _as_rows(m)
    if not rows or not rows[0]:
        return 0
    int_rows = [clear_row_denominators(list(r)) for r in rows]
    return _kernels.bareiss_rank(int_rows)


def _rref(rows):
    """Reduced row echelon form over Fraction; returns (rref rows, pivot cols)."""
    M = [list(r) for r in rows]
    m = len(M)
    n = len(M[0]) if m else 0
    pivots = []
    rank = 0
    for col in range(n):
        piv = -1
        for r in range(rank, m):
            if M[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        if p != 1:
            M[rank] = [x / p for x in M[rank]]
        for r in range(m):
            if r != rank and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    return M, pivots


def nullspace(m):
    """Basis of the exact right kernel {x : Mx = 0}.

    One basis vector per free column, in ascending free-column order; the
    free coordinate is set to 1 and pivots are solved for, so the result is
    deterministic and every vector satisfies Mx = 0 exactly.
    """
    rows = _as_rows(m)
    if not rows:
        return []
    n = len(rows[0])
    R, pivots = _rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][free]
        basis.append(tuple(v))
    return basis
