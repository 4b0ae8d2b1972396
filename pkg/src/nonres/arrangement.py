"""Projective hyperplane arrangements, flats, and intersection lattices.

Hyperplanes live in P^n and are stored as normalized linear forms on C^{n+1}
(exact rational coefficients, first nonzero coefficient scaled to 1).  Flats
are index sets into the arrangement, so equality and hashing are canonical;
the geometry (cones, quotients) is recomputed from the forms on demand.

Rank conventions follow the cone picture: r(S) is the codimension of the
common intersection in P^n, equal to the rank of the coefficient matrix, and
r(S) = n+1 exactly when the intersection is empty.
"""

from dataclasses import dataclass
from fractions import Fraction

from .linalg import nullspace, rat_rank

__all__ = [
    "Hyperplane",
    "Arrangement",
    "Flat",
    "IntersectionLattice",
    "Restriction",
    "normalize_form",
    "closure",
    "enumerate_lattice",
    "irreducible_decomposition",
    "is_irreducible",
    "localization",
    "restriction",
    "poincare_polynomial",
    "euler_characteristic",
]


def normalize_form(coeffs):
    """Scale a nonzero rational vector so its first nonzero entry is 1."""
    vec = tuple(Fraction(c) for c in coeffs)
    for c in vec:
        if c:
            return tuple(x / c for x in vec)
    raise ValueError("zero linear form does not define a hyperplane")


class Hyperplane:
    """A projective hyperplane, canonically represented by a normalized form."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", normalize_form(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Hyperplane is immutable")

    def __eq__(self, other):
        return isinstance(other, Hyperplane) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Hyperplane({[str(c) for c in self.coeffs]})"


@dataclass(frozen=True)
class Flat:
    """A flat as a sorted index set with its rank attached."""

    members: tuple
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, index):
        return index in self.members

    def issubset(self, other):
        other_members = other.members if isinstance(other, Flat) else other
        return set(self.members) <= set(other_members)

    @property
    def sort_key(self):
        return (self.rank, self.members)


@dataclass(frozen=True)
class IntersectionLattice:
    """All flats of an arrangement, grouped by rank and ordered by inclusion."""

    flats: tuple

    def by_rank(self, r):
        return tuple(f for f in self.flats if f.rank == r)

    @property
    def max_rank(self):
        return max((f.rank for f in self.flats), default=0)

    def __len__(self):
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)


@dataclass(frozen=True)
class Restriction:
    """The induced arrangement inside Z(F), with flat tags.

    ``tags[i]`` is the flat closure(F + {H}) shared by every original
    hyperplane contributing to restricted hyperplane i; ``sources[i]`` lists
    those contributing original indices.
    """

    arrangement: "Arrangement"
    tags: tuple
    sources: tuple


class Arrangement:
    """An ordered, duplicate-free list of hyperplanes in P^ambient_dim."""

    def __init__(self, ambient_dim, hyperplanes, labels=None):
        n = int(ambient_dim)
        if n < 0:
            raise ValueError("ambient dimension must be nonnegative")
        planes = []
        for idx, h in enumerate(hyperplanes):
            if not isinstance(h, Hyperplane):
                try:
                    h = Hyperplane(h)
                except ValueError as exc:
                    raise ValueError(f"hyperplane {idx}: {exc}") from None
            if len(h.coeffs) != n + 1:
                raise ValueError(
                    f"hyperplane {idx}: expected {n + 1} coefficients, got {len(h.coeffs)}"
                )
            planes.append(h)
        seen = {}
        for idx, h in enumerate(planes):
            if h.coeffs in seen:
                raise ValueError(
                    f"hyperplane {idx} duplicates hyperplane {seen[h.coeffs]}"
                )
            seen[h.coeffs] = idx
        if labels is None:
            labels = tuple(f"H{i + 1}" for i in range(len(planes)))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != len(planes):
                raise ValueError("label count does not match hyperplane count")
            if len(set(labels)) != len(labels):
                raise ValueError("labels must be distinct")
        self.ambient_dim = n
        self.hyperplanes = tuple(planes)
        self.labels = labels
        self._rank_cache = {}
        self._closure_cache = {}
        self._lattice = None
        self._decomp_cache = {}

    def __len__(self):
        return len(self.hyperplanes)

    def __eq__(self, other):
        return (
            isinstance(other, Arrangement)
            and self.ambient_dim == other.ambient_dim
            and self.hyperplanes == other.hyperplanes
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.hyperplanes, self.labels))

    def __repr__(self):
        return f"Arrangement(P^{self.ambient_dim}, {len(self)} hyperplanes)"

    def form(self, index):
        return self.hyperplanes[index].coeffs

    def matrix(self, members):
        return [list(self.form(i)) for i in members]

    def label_of(self, index):
        return self.labels[index]

    def index_of_label(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown hyperplane label {label!r}") from None

    def subset_rank(self, members):
        """r(S) = codim Z(S), computed exactly and cached."""
        key = frozenset(members)
        hit = self._rank_cache.get(key)
        if hit is None:
            hit = rat_rank(self.matrix(sorted(key))) if key else 0
            self._rank_cache[key] = hit
        return hit

    def closure(self, members):
        """Smallest flat containing the index set: all H vanishing on Z(S)."""
        key = frozenset(members)
        for i in key:
            if not 0 <= i < len(self):
                raise IndexError(f"hyperplane index {i} out of range")
        hit = self._closure_cache.get(key)
        if hit is not None:
            return hit
        if not key:
            flat = Flat((), 0)
        else:
            basis = nullspace(self.matrix(sorted(key)))
            rank = self.ambient_dim + 1 - len(basis)
            if not basis:
                flat = Flat(tuple(range(len(self))), rank)
            else:
                out = []
                for h in range(len(self)):
                    form = self.form(h)
                    if all(
                        sum(form[j] * v[j] for j in range(len(form))) == 0
                        for v in basis
                    ):
                        out.append(h)
                flat = Flat(tuple(out), rank)
        self._closure_cache[key] = flat
        return flat

    def is_flat(self, members):
        flat = self.closure(members)
        return set(flat.members) == set(members)

    def top_flat(self):
        return self.closure(range(len(self)))

    def lattice(self):
        """Breadth-first closure of unions, starting from the singletons."""
        if self._lattice is not None:
            return self._lattice
        flats = {self.closure(())}
        frontier = set()
        for i in range(len(self)):
            f = self.closure((i,))
            if f not in flats:
                flats.add(f)
                frontier.add(f)
        while frontier:
            fresh = set()
            for flat in frontier:
                base = set(flat.members)
                for i in range(len(self)):
                    if i in base:
                        continue
                    g = self.closure(flat.members + (i,))
                    if g not in flats:
                        flats.add(g)
                        fresh.add(g)
            frontier = fresh
        ordered = tuple(sorted(flats, key=lambda f: f.sort_key))
        self._lattice = IntersectionLattice(ordered)
        return self._lattice

    def decomposition(self, flat):
        """Partition a flat into irreducible flats with additive ranks.

        Any bipartition with additive ranks splits a flat into two smaller
        flats, and the fully split result is unique, so recursive splitting
        with memoization lands on the canonical decomposition.
        """
        if not flat.members:
            raise ValueError("the empty flat has no irreducible decomposition")
        key = flat.members
        hit = self._decomp_cache.get(key)
        if hit is not None:
            return hit
        members = flat.members
        k = len(members)
        result = None
        for mask in range(1, 1 << (k - 1)):
            part2 = tuple(members[j + 1] for j in range(k - 1) if mask >> j & 1)
            part1 = tuple(m for m in members if m not in part2)
            r1 = self.subset_rank(part1)
            r2 = self.subset_rank(part2)
            if r1 + r2 == flat.rank:
                left = self.decomposition(Flat(part1, r1))
                right = self.decomposition(Flat(part2, r2))
                result = tuple(
                    sorted(left + right, key=lambda f: f.members)
                )
                break
        if result is None:
            result = (flat,)
        self._decomp_cache[key] = result
        return result


def closure(arrangement, members):
    return arrangement.closure(members)


def enumerate_lattice(arrangement):
    return arrangement.lattice()


def irreducible_decomposition(arrangement, flat):
    return arrangement.decomposition(flat)


def is_irreducible(arrangement, flat):
    if not flat.members:
        return False
    return len(arrangement.decomposition(flat)) == 1


def localization(arrangement, flat):
    """The arrangement induced in the quotient P(C^{n+1}/V(F)).

    Quotient coordinates come from standard basis vectors completing a basis
    of V(F); the members of F descend to distinct hyperplanes there.
    """
    if not flat.members:
        raise ValueError("cannot localize at the empty flat")
    n = arrangement.ambient_dim
    basis = nullspace(arrangement.matrix(flat.members))
    current = [list(v) for v in basis]
    chosen = []
    for i in range(n + 1):
        unit = [Fraction(0)] * (n + 1)
        unit[i] = Fraction(1)
        if rat_rank(current + [unit]) > len(current):
            current.append(unit)
            chosen.append(i)
    forms = [[arrangement.form(h)[i] for i in chosen] for h in flat.members]
    labels = [arrangement.label_of(h) for h in flat.members]
    return Arrangement(flat.rank - 1, forms, labels)


def restriction(arrangement, flat):
    """The arrangement induced inside Z(F), with flat tags.

    Each hyperplane outside F cuts Z(F) in a hyperplane; coincident cuts are
    merged and tagged with the flat closure(F + {H}) they correspond to under
    the bijection between flats over F and flats of the restriction.
    """
    if not flat.members:
        raise ValueError("cannot restrict to the empty flat")
    n = arrangement.ambient_dim
    if flat.rank > n:
        raise ValueError(
            f"restriction undefined: flat of rank {flat.rank} has empty intersection in P^{n}"
        )
    basis = nullspace(arrangement.matrix(flat.members))
    inside = set(flat.members)
    seen = {}
    forms = []
    tags = []
    sources = []
    labels = []
    for h in range(len(arrangement)):
        if h in inside:
            continue
        form = arrangement.form(h)
        vec = tuple(
            sum(form[j] * b[j] for j in range(len(form))) for b in basis
        )
        nf = normalize_form(vec)
        if nf in seen:
            i = seen[nf]
            sources[i] = sources[i] + (h,)
        else:
            seen[nf] = len(forms)
            forms.append(nf)
            tags.append(arrangement.closure(flat.members + (h,)))
            sources.append((h,))
            labels.append(arrangement.label_of(h))
    restricted = Arrangement(n - flat.rank, forms, labels)
    return Restriction(restricted, tuple(tags), tuple(sources))


def _moebius(lattice):
    # flats arrive sorted by rank, so every proper subflat is already done
    mu = {}
    for flat in lattice.flats:
        if not flat.members:
            mu[flat] = 1
            continue
        fset = set(flat.members)
        mu[flat] = -sum(
            mu[other]
            for other in lattice.flats
            if other.rank < flat.rank and set(other.members) < fset
        )
    return mu


def poincare_polynomial(arrangement):
    """Betti numbers of the projective complement, as coefficients b_0..b_n.

    Computed from the Moebius function of the cone lattice; the cone
    polynomial factors exactly as (1+t) times the projective one.
    """
    if len(arrangement) == 0:
        raise ValueError("Poincare polynomial requires a nonempty arrangement")
    lattice = arrangement.lattice()
    mu = _moebius(lattice)
    top = lattice.max_rank
    cone = [0] * (top + 1)
    for flat in lattice.flats:
        cone[flat.rank] += mu[flat] * (-1) ** flat.rank
    proj = [cone[0]]
    for i in range(1, top):
        proj.append(cone[i] - proj[i - 1])
    if cone[top] != (proj[top - 1] if top >= 1 else 0):
        raise ArithmeticError("cone Poincare polynomial not divisible by 1+t")
    n = arrangement.ambient_dim
    proj.extend([0] * (n + 1 - len(proj)))
    return tuple(proj[: n + 1])


def euler_characteristic(arrangement):
    poly = poincare_polynomial(arrangement)
    return sum(c if i % 2 == 0 else -c for i, c in enumerate(poly))
