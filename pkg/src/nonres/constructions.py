"""Geometric machinery: liftings, generic sections, and deconing.

The randomized constructions draw integer coefficients from [-B, B] with B
doubling on retry, seeded deterministically from the input, and every
genericity condition is then verified exactly — a returned object is never
only probably generic.
"""

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement, Flat, Hyperplane, is_irreducible
from .linalg import nullspace, rat_rank

__all__ = [
    "LiftedArrangement",
    "SectionResult",
    "AffineHyperplane",
    "AffineArrangement",
    "lift_bipartition",
    "generic_section",
    "decone",
    "RETRY_BUDGET",
]

RETRY_BUDGET = 64


def _seed_from(*parts):
    text = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def _arrangement_token(arrangement):
    return ";".join(
        ",".join(str(c) for c in h.coeffs) for h in arrangement.hyperplanes
    )


@dataclass(frozen=True)
class LiftedArrangement:
    """A lifting of a base arrangement into one dimension higher.

    Hyperplanes in part1 are lifted vertically, those in part2 through the
    direction (z, 1); each lifted hyperplane meets the added hyperplane at
    infinity exactly in its base hyperplane.
    """

    base: Arrangement
    lifted: Arrangement
    part1: tuple
    part2: tuple
    direction: tuple
    seed: int


@dataclass(frozen=True)
class SectionResult:
    """A generic hyperplane through an irreducible flat.

    The section contains Z(F) exactly for the flats F containing the chosen
    irreducible flat, which is the verified genericity condition.
    """

    hyperplane: Hyperplane
    flat: Flat
    seed: int
    attempts: int


@dataclass(frozen=True)
class AffineHyperplane:
    """constant + sum(coeffs[i] * t_i) = 0 in the affine chart."""

    constant: Fraction
    coeffs: tuple


@dataclass(frozen=True)
class AffineArrangement:
    """An arrangement deconed at one member, in exact affine coordinates.

    ``lines[i]`` is the affine trace of hyperplane ``original_indices[i]``.
    The meridian of the deleted hyperplane is the inverse of the product of
    the meridians of the remaining ones, so no information is lost.
    """

    ambient_dim: int
    lines: tuple
    original_indices: tuple
    infinity_index: int
    infinity_label: str


def _normalize_parts(arrangement, parts):
    if hasattr(parts, "part1"):
        p1, p2 = tuple(parts.part1), tuple(parts.part2)
    else:
        p1, p2 = (tuple(parts[0]), tuple(parts[1]))
    p1 = tuple(sorted(set(p1)))
    p2 = tuple(sorted(set(p2)))
    if set(p1) & set(p2):
        raise ValueError("parts overlap")
    if set(p1) | set(p2) != set(range(len(arrangement))):
        raise ValueError("parts do not cover the arrangement")
    return p1, p2


def _sub_lattice_cones(arrangement, part):
    """Nullspace bases of V(F) for every flat F of the sub-arrangement on part."""
    n = arrangement.ambient_dim
    if not part:
        ident = [
            tuple(Fraction(1) if j == i else Fraction(0) for j in range(n + 1))
            for i in range(n + 1)
        ]
        return [((), ident)]
    sub = Arrangement(n, [arrangement.form(i) for i in part])
    out = []
    for flat in sub.lattice():
        members = tuple(part[i] for i in flat.members)
        if flat.members:
            basis = nullspace(sub.matrix(flat.members))
        else:
            basis = [
                tuple(Fraction(1) if j == i else Fraction(0) for j in range(n + 1))
                for i in range(n + 1)
            ]
        out.append((members, basis))
    return out


def lift_bipartition(arrangement, parts, seed=None):
    """Lift an arrangement along a bipartition so that exactly the subsets
    with rank-additive splits keep their rank.

    The direction z must avoid V(F1) + V(F2) for every pair of sub-lattice
    flats whose cones do not already span; the sample is verified exactly
    and retried with a doubled coefficient box on failure.
    """
    part1, part2 = _normalize_parts(arrangement, parts)
    n = arrangement.ambient_dim
    if seed is None:
        seed = _seed_from("lift", _arrangement_token(arrangement), part1, part2)
    rng = random.Random(seed)
    cones1 = _sub_lattice_cones(arrangement, part1)
    cones2 = _sub_lattice_cones(arrangement, part2)
    constraints = []
    for _, basis1 in cones1:
        for _, basis2 in cones2:
            span = [list(v) for v in basis1] + [list(v) for v in basis2]
            r = rat_rank(span)
            if r < n + 1:
                constraints.append((span, r))
    bound = 4
    z = None
    violating = None
    for attempt in range(RETRY_BUDGET):
        candidate = tuple(
            Fraction(rng.randint(-bound, bound)) for _ in range(n + 1)
        )
        violating = None
        for span, r in constraints:
            if rat_rank(span + [list(candidate)]) == r:
                violating = (span, r)
                break
        if violating is None:
            z = candidate
            break
        bound *= 2
    if z is None:
        raise ArithmeticError(
            f"no generic lift direction found within {RETRY_BUDGET} attempts"
        )
    vertical = set(part1)
    lifted_forms = []
    for h in range(len(arrangement)):
        form = arrangement.form(h)
        if h in vertical:
            lifted_forms.append(tuple(form) + (Fraction(0),))
        else:
            shift = sum(form[j] * z[j] for j in range(n + 1))
            lifted_forms.append(tuple(form) + (-shift,))
    lifted = Arrangement(n + 1, lifted_forms, arrangement.labels)
    return LiftedArrangement(
        base=arrangement,
        lifted=lifted,
        part1=part1,
        part2=part2,
        direction=z,
        seed=seed,
    )


def generic_section(arrangement, flat, seed=None):
    """A hyperplane through Z(I) containing Z(F) only for flats F over I.

    Requires an irreducible flat of rank >= 2.  Samples rational combinations
    of the forms cutting V(I) and verifies the containment equivalence over
    the whole lattice before returning.
    """
    if not is_irreducible(arrangement, flat):
        raise ValueError("generic section requires an irreducible flat")
    if flat.rank < 2:
        raise ValueError("generic section requires a flat of rank >= 2")
    if seed is None:
        seed = _seed_from("section", _arrangement_token(arrangement), flat.members)
    rng = random.Random(seed)
    # a row basis of the forms vanishing on V(I)
    rows = []
    for h in flat.members:
        candidate = rows + [list(arrangement.form(h))]
        if rat_rank(candidate) > len(rows):
            rows.append(list(arrangement.form(h)))
    lattice = arrangement.lattice()
    flat_matrices = []
    for other in lattice:
        mat = arrangement.matrix(other.members)
        contains_target = flat.issubset(other)
        flat_matrices.append((other, mat, other.rank, contains_target))
    bound = 4
    last_violation = None
    for attempt in range(1, RETRY_BUDGET + 1):
        coeffs = [Fraction(rng.randint(-bound, bound)) for _ in rows]
        form = [
            sum(c * row[j] for c, row in zip(coeffs, rows))
            for j in range(arrangement.ambient_dim + 1)
        ]
        if not any(form):
            bound *= 2
            continue
        ok = True
        for other, mat, rank, contains_target in flat_matrices:
            in_span = rat_rank(mat + [form]) == rank
            if in_span != contains_target:
                ok = False
                last_violation = other
                break
        if ok:
            return SectionResult(
                hyperplane=Hyperplane(form),
                flat=flat,
                seed=seed,
                attempts=attempt,
            )
        bound *= 2
    labels = (
        ",".join(arrangement.label_of(h) for h in last_violation.members)
        if last_violation is not None
        else ""
    )
    raise ArithmeticError(
        f"no generic section found within {RETRY_BUDGET} attempts"
        + (f" (last violating flat {{{labels}}})" if labels else "")
    )


def decone(arrangement, infinity):
    """Pass to the affine chart complementing one member hyperplane.

    Coordinates come from the standard basis functionals away from the pivot
    of the deleted form; each remaining hyperplane gets an exact affine
    equation constant + sum(coeffs * t) = 0.
    """
    k = len(arrangement)
    if not 0 <= infinity < k:
        raise ValueError(f"hyperplane index {infinity} out of range")
    form0 = arrangement.form(infinity)
    pivot = next(i for i, c in enumerate(form0) if c)
    free_positions = [i for i in range(len(form0)) if i != pivot]
    lines = []
    originals = []
    for h in range(k):
        if h == infinity:
            continue
        form = arrangement.form(h)
        a0 = form[pivot] / form0[pivot]
        coeffs = tuple(form[j] - a0 * form0[j] for j in free_positions)
        if not any(coeffs):
            raise ArithmeticError("affine trace degenerated to a constant")
        lines.append(AffineHyperplane(constant=a0, coeffs=coeffs))
        originals.append(h)
    return AffineArrangement(
        ambient_dim=arrangement.ambient_dim,
        lines=tuple(lines),
        original_indices=tuple(originals),
        infinity_index=infinity,
        infinity_label=arrangement.label_of(infinity),
    )
