"""Fourier-Motzkin feasibility oracle, used by tests only.

Decides whether rational weights on the hyperplanes exist with total zero
and at least 1 on every incidence row — the same system the simplex decides,
by a completely different elimination, so the two can cross-check.
"""

from fractions import Fraction
from math import gcd


def _canonical(coeffs, rhs):
    vals = list(coeffs) + [rhs]
    denoms = 1
    for v in vals:
        denoms = denoms * v.denominator // gcd(denoms, v.denominator)
    ints = [int(v * denoms) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def fm_feasible(inequalities, nvars):
    """Feasibility of {x in Q^nvars : sum(c_i x_i) >= rhs for each row}."""
    rows = set()
    for coeffs, rhs in inequalities:
        rows.add(_canonical([Fraction(c) for c in coeffs], Fraction(rhs)))
    for v in range(nvars):
        pos, neg, keep = [], [], set()
        for coeffs, rhs in rows:
            if coeffs[v] > 0:
                pos.append((coeffs, rhs))
            elif coeffs[v] < 0:
                neg.append((coeffs, rhs))
            else:
                keep.add((coeffs, rhs))
        for cp, rp in pos:
            for cn, rn in neg:
                coeffs = tuple(
                    Fraction(-cn[v] * cp[j] + cp[v] * cn[j])
                    for j in range(nvars)
                )
                rhs = Fraction(-cn[v] * rp + cp[v] * rn)
                keep.add(_canonical(coeffs, rhs))
        rows = keep
    return all(rhs <= 0 for _, rhs in rows)


def delta_system_feasible(matrix):
    """Does a strict delta certificate exist for this incidence matrix?

    Encodes {sum delta = 0, row sums >= 1} by substituting the last variable
    and running Fourier-Motzkin on the rest.
    """
    k = matrix.n_cols
    rows = []
    for flat in matrix.flats:
        members = set(flat.members)
        last_in = k - 1 in members
        coeffs = [
            Fraction((1 if i in members else 0) - (1 if last_in else 0))
            for i in range(k - 1)
        ]
        rows.append((coeffs, Fraction(1)))
    return fm_feasible(rows, k - 1)
