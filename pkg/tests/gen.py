"""Seeded random instances shared by the property and acceptance tests."""

from fractions import Fraction

from nonres.arrangement import Arrangement, Flat, normalize_form
from nonres.certificates import IncidenceMatrix
from nonres.localsys import MonodromyMap


def random_line_arrangement(rng, min_lines=3, max_lines=6, denom_max=6):
    """A random rational (hence complexified real) line arrangement with a
    valid monodromy map: common exponent denominator <= denom_max, sum in Z.
    """
    k = rng.randint(min_lines, max_lines)
    forms = []
    seen = set()
    while len(forms) < k:
        vec = tuple(Fraction(rng.randint(-3, 3)) for _ in range(3))
        if not any(vec):
            continue
        nf = normalize_form(vec)
        if nf not in seen:
            seen.add(nf)
            forms.append(nf)
    d = rng.randint(1, denom_max)
    numerators = [rng.randrange(0, d) for _ in range(k - 1)]
    last = (-sum(numerators)) % d
    exps = [Fraction(x, d) for x in numerators] + [Fraction(last, d)]
    return Arrangement(2, forms), MonodromyMap(exps)


def random_incidence_matrix(rng, max_rows=5, max_cols=8):
    """A random 0/1 incidence matrix with nonempty rows."""
    cols = rng.randint(1, max_cols)
    rows = rng.randint(0, max_rows)
    flats = []
    for _ in range(rows):
        members = tuple(
            sorted(rng.sample(range(cols), rng.randint(1, cols)))
        )
        flats.append(Flat(members, min(len(members), 2)))
    return IncidenceMatrix(tuple(flats), cols)
