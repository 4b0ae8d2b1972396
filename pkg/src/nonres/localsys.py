"""Rank-one local systems as rational monodromy exponents.

A local system is determined by one unimodular monodromy value per
hyperplane, m(H) = exp(2*pi*i*q_H) with q_H rational; the product over the
arrangement must be 1, i.e. the exponents must sum to an integer.  Every
criterion downstream only ever asks whether m(F) = 1 for a flat F, which is
the exact rational question "is the exponent sum an integer".
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .arrangement import Flat, is_irreducible
from .linalg import nullspace

__all__ = [
    "MonodromyMap",
    "ResonantPoint",
    "monodromy_of_flat",
    "resonant_flats",
    "resonant_points",
]


class MonodromyMap:
    """Exponents q_H, one per hyperplane, normalized into [0, 1)."""

    __slots__ = ("exponents",)

    def __init__(self, exponents):
        exps = tuple(Fraction(q) % 1 for q in exponents)
        total = sum(exps, Fraction(0))
        if total.denominator != 1:
            raise ValueError(
                f"exponent sum {total} not an integer: not a local system on the complement"
            )
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, name, value):
        raise AttributeError("MonodromyMap is immutable")

    def __len__(self):
        return len(self.exponents)

    def __eq__(self, other):
        return isinstance(other, MonodromyMap) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"MonodromyMap({[str(q) for q in self.exponents]})"

    def of_flat(self, members):
        """Exponent sum mod 1; zero means m(F) = 1."""
        return sum((self.exponents[i] for i in members), Fraction(0)) % 1

    def is_trivial_on(self, index):
        return self.exponents[index] == 0

    def is_trivial(self):
        return all(q == 0 for q in self.exponents)

    def inverse(self):
        """The dual system, q -> (1 - q) mod 1."""
        return MonodromyMap(tuple((1 - q) % 1 for q in self.exponents))

    def level(self):
        """Least N with all values in the N-th roots of unity."""
        return lcm(*(q.denominator for q in self.exponents)) if self.exponents else 1


@dataclass(frozen=True)
class ResonantPoint:
    """A point of multiplicity >= 3 whose monodromy product is 1."""

    point: tuple
    flat: Flat


def _check_pair(arrangement, monodromy):
    if len(monodromy) != len(arrangement):
        raise ValueError(
            f"monodromy has {len(monodromy)} exponents for {len(arrangement)} hyperplanes"
        )


def monodromy_of_flat(monodromy, flat):
    members = flat.members if hasattr(flat, "members") else tuple(flat)
    return monodromy.of_flat(members)


def resonant_flats(arrangement, monodromy):
    """All irreducible flats F with 1 <= r(F) <= n and m(F) = 1.

    Singletons {H} with m(H) = 1 qualify.  Returned sorted by (rank, members).
    """
    _check_pair(arrangement, monodromy)
    n = arrangement.ambient_dim
    out = []
    for flat in arrangement.lattice():
        if not 1 <= flat.rank <= n:
            continue
        if monodromy.of_flat(flat.members) != 0:
            continue
        if is_irreducible(arrangement, flat):
            out.append(flat)
    return tuple(sorted(out, key=lambda f: f.sort_key))


def _projective_point(arrangement, flat):
    basis = nullspace(arrangement.matrix(flat.members))
    if len(basis) != 1:
        raise ValueError("flat does not cut out a single point")
    vec = basis[0]
    for c in vec:
        if c:
            return tuple(x / c for x in vec)
    raise ArithmeticError("nullspace vector is zero")


def resonant_points(arrangement, monodromy):
    """Resonant intersection points of a line arrangement.

    Points of multiplicity >= 3 with integral exponent sum, each returned
    with its rank-2 flat of incident lines and normalized coordinates.
    """
    _check_pair(arrangement, monodromy)
    if arrangement.ambient_dim != 2:
        raise ValueError("resonant points are defined for line arrangements in P^2")
    out = []
    for flat in arrangement.lattice().by_rank(2):
        if len(flat) >= 3 and monodromy.of_flat(flat.members) == 0:
            out.append(ResonantPoint(_projective_point(arrangement, flat), flat))
    return tuple(sorted(out, key=lambda p: p.flat.sort_key))
