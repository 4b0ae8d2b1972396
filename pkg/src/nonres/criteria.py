"""Combinatorial nonresonance criteria, each with a checkable certificate.

Every criterion is a sufficient condition: "fired" comes with a certificate
(a delta certificate, a bipartition, or flat references) establishing that
cohomology vanishes below some level; "inconclusive" comes with the witness
that blocked it.  Nothing here ever claims resonance — that question is
deferred to the topological oracle.

Levels follow the k-vanishing convention: a conclusion of level k asserts
h^p = 0 for all p < k, and level n (the ambient dimension) together with the
vanishing above n that holds for these complements means nonresonant.
"""

from dataclasses import dataclass

from .arrangement import Flat, is_irreducible
from .certificates import (
    DeltaCertificate,
    decide_constant_combination,
    delta_for_hyperplane,
    incidence_matrix,
    verify_delta,
)
from .localsys import resonant_flats

__all__ = [
    "Bipartition",
    "VanishingConclusion",
    "CriterionResult",
    "CriterionReport",
    "UniquePointCertificate",
    "ShelterCertificate",
    "CdoCertificate",
    "CRITERIA_ORDER",
    "check_cdo",
    "check_lambda_criterion",
    "check_unique_resonant_point",
    "check_bipartition_lines",
    "search_bipartition_lines",
    "check_bipartition_general",
    "check_irreducible_shelter",
    "run_all",
    "MAX_BRUTE_PARTITION",
]

CRITERIA_ORDER = (
    "cdo",
    "lambda",
    "point",
    "bipartition",
    "bipartition-general",
    "shelter",
)

MAX_BRUTE_PARTITION = 16


@dataclass(frozen=True)
class Bipartition:
    """A two-part partition of the hyperplane index set, both parts nonempty."""

    part1: tuple
    part2: tuple

    def __post_init__(self):
        object.__setattr__(self, "part1", tuple(sorted(self.part1)))
        object.__setattr__(self, "part2", tuple(sorted(self.part2)))

    @staticmethod
    def of(arrangement, part1, part2=None):
        size = len(arrangement)
        p1 = tuple(sorted(set(part1)))
        if part2 is None:
            p2 = tuple(i for i in range(size) if i not in set(p1))
        else:
            p2 = tuple(sorted(set(part2)))
        if set(p1) & set(p2):
            raise ValueError("malformed partition: parts overlap")
        if set(p1) | set(p2) != set(range(size)):
            raise ValueError("malformed partition: parts do not cover the arrangement")
        if not p1 or not p2:
            raise ValueError("malformed partition: both parts must be nonempty")
        return Bipartition(p1, p2)


@dataclass(frozen=True)
class CdoCertificate:
    hyperplane: int
    delta: DeltaCertificate


@dataclass(frozen=True)
class UniquePointCertificate:
    flat: Flat
    line: int
    off_line: int


@dataclass(frozen=True)
class ShelterCertificate:
    flat: Flat


@dataclass(frozen=True)
class VanishingConclusion:
    criterion: str
    level: int
    nonresonant: bool
    certificate: object


@dataclass(frozen=True)
class CriterionResult:
    criterion: str
    status: str  # fired | inconclusive | error
    conclusion: object = None
    witness: object = None
    detail: str = ""


@dataclass(frozen=True)
class CriterionReport:
    ambient_dim: int
    results: tuple
    best_level: int
    nonresonant: bool


def _validate_pair(arrangement, monodromy):
    if len(arrangement) < 1:
        raise ValueError("criteria require a nonempty arrangement")
    if len(monodromy) != len(arrangement):
        raise ValueError("monodromy exponent count does not match the arrangement")


def _fired(criterion, level, n, certificate):
    conclusion = VanishingConclusion(
        criterion=criterion,
        level=level,
        nonresonant=(level >= n),
        certificate=certificate,
    )
    return CriterionResult(criterion, "fired", conclusion=conclusion)


def check_cdo(arrangement, monodromy):
    """Fires iff some hyperplane lies in no resonant flat.

    The certificate is the closed-form delta candidate for that hyperplane,
    which the strict verifier accepts exactly under this condition.
    """
    _validate_pair(arrangement, monodromy)
    rf = resonant_flats(arrangement, monodromy)
    covered = set()
    for flat in rf:
        covered.update(flat.members)
    n = arrangement.ambient_dim
    for h in range(len(arrangement)):
        if h not in covered:
            delta = delta_for_hyperplane(arrangement, h)
            ok, reason = verify_delta(arrangement, rf, delta)
            if not ok:
                raise ArithmeticError(f"cdo certificate failed verification: {reason}")
            return _fired("cdo", n, n, CdoCertificate(h, delta))
    return CriterionResult(
        "cdo",
        "inconclusive",
        detail="every hyperplane lies in some resonant flat",
    )


def check_lambda_criterion(arrangement, monodromy):
    """The incidence Farkas alternative on the resonant flats.

    Infeasible side: nonresonant with a delta certificate.  Feasible side:
    inconclusive, carrying the nonzero constant-sum lambda witness.
    """
    _validate_pair(arrangement, monodromy)
    rf = resonant_flats(arrangement, monodromy)
    matrix = incidence_matrix(arrangement, rf)
    outcome = decide_constant_combination(matrix)
    n = arrangement.ambient_dim
    if isinstance(outcome, DeltaCertificate):
        ok, reason = verify_delta(arrangement, rf, outcome)
        if not ok:
            raise ArithmeticError(f"delta certificate failed verification: {reason}")
        return _fired("lambda", n, n, outcome)
    return CriterionResult(
        "lambda",
        "inconclusive",
        witness=outcome,
        detail="a nonzero constant-sum weighting of the resonant flats exists",
    )


def check_unique_resonant_point(arrangement, monodromy):
    """Line-arrangement criterion: a nontrivial line through a unique resonant
    point, plus a nontrivial line missing that point.
    """
    _validate_pair(arrangement, monodromy)
    if arrangement.ambient_dim != 2:
        raise ValueError("unique-resonant-point criterion needs a line arrangement")
    rf = resonant_flats(arrangement, monodromy)
    exps = monodromy.exponents
    for flat in rf:
        if flat.rank != 2:
            continue
        for h1 in flat.members:
            if exps[h1] == 0:
                continue
            if sum(1 for g in rf if h1 in g) != 1:
                continue
            for h2 in range(len(arrangement)):
                if h2 not in flat and exps[h2] != 0:
                    cert = UniquePointCertificate(flat, h1, h2)
                    return _fired("point", 2, 2, cert)
    return CriterionResult(
        "point",
        "inconclusive",
        detail="no qualifying resonant point / line pair",
    )


def check_bipartition_lines(arrangement, monodromy, bipartition):
    """Line bipartition: nontrivial lines on both sides and no resonant point
    with lines in both parts.
    """
    _validate_pair(arrangement, monodromy)
    if arrangement.ambient_dim != 2:
        raise ValueError("line bipartition criterion needs a line arrangement")
    bipartition = Bipartition.of(arrangement, bipartition.part1, bipartition.part2)
    exps = monodromy.exponents
    for part, name in ((bipartition.part1, "part1"), (bipartition.part2, "part2")):
        if all(exps[h] == 0 for h in part):
            return CriterionResult(
                "bipartition",
                "inconclusive",
                witness=bipartition,
                detail=f"{name} carries only trivial monodromy",
            )
    rf = resonant_flats(arrangement, monodromy)
    p1 = set(bipartition.part1)
    for flat in rf:
        if flat.rank != 2 or len(flat) < 3:
            continue
        members = set(flat.members)
        if members & p1 and members - p1:
            return CriterionResult(
                "bipartition",
                "inconclusive",
                witness=flat,
                detail="a resonant point has lines in both parts",
            )
    return _fired("bipartition", 2, 2, bipartition)


def _resonance_components(arrangement, monodromy):
    """Connected components of the graph joining lines at resonant points."""
    k = len(arrangement)
    parent = list(range(k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    rf = resonant_flats(arrangement, monodromy)
    for flat in rf:
        if flat.rank == 2 and len(flat) >= 3:
            first = flat.members[0]
            for other in flat.members[1:]:
                union(first, other)
    comps = {}
    for h in range(k):
        comps.setdefault(find(h), []).append(h)
    return [tuple(sorted(c)) for c in sorted(comps.values())]


def search_bipartition_lines(arrangement, monodromy):
    """Find a valid line bipartition from the resonance-graph components.

    One exists iff the nontrivial lines meet at least two components; the
    returned partition takes the component of the lowest-indexed nontrivial
    line as part1.  Returns None when no valid bipartition exists.
    """
    _validate_pair(arrangement, monodromy)
    if arrangement.ambient_dim != 2:
        raise ValueError("line bipartition search needs a line arrangement")
    exps = monodromy.exponents
    comps = _resonance_components(arrangement, monodromy)
    marked = [c for c in comps if any(exps[h] != 0 for h in c)]
    if len(marked) < 2:
        return None
    lead = min(h for h in range(len(arrangement)) if exps[h] != 0)
    part1 = next(c for c in comps if lead in c)
    part2 = tuple(h for h in range(len(arrangement)) if h not in set(part1))
    return Bipartition(part1, part2)


def check_bipartition_general(arrangement, monodromy, bipartition):
    """Rank-additive bipartition criterion, valid in any dimension.

    Fires iff the monodromy product over part1 is nontrivial and every flat
    of rank <= n splits with additive ranks across the parts (flats suffice:
    additivity for a subset follows from additivity for its closure).
    """
    _validate_pair(arrangement, monodromy)
    bipartition = Bipartition.of(arrangement, bipartition.part1, bipartition.part2)
    n = arrangement.ambient_dim
    if monodromy.of_flat(bipartition.part1) == 0:
        return CriterionResult(
            "bipartition-general",
            "inconclusive",
            witness=bipartition,
            detail="monodromy product over part1 is trivial",
        )
    p1 = set(bipartition.part1)
    for flat in arrangement.lattice():
        if not 1 <= flat.rank <= n:
            continue
        s1 = tuple(h for h in flat.members if h in p1)
        s2 = tuple(h for h in flat.members if h not in p1)
        if arrangement.subset_rank(s1) + arrangement.subset_rank(s2) != flat.rank:
            return CriterionResult(
                "bipartition-general",
                "inconclusive",
                witness=flat,
                detail="flat does not split with additive ranks",
            )
    return _fired("bipartition-general", n, n, bipartition)


def _search_bipartition_general(arrangement, monodromy):
    k = len(arrangement)
    if k > MAX_BRUTE_PARTITION:
        raise ValueError(
            f"brute-force partition search limited to {MAX_BRUTE_PARTITION} hyperplanes"
        )
    # part2 ranges over nonempty subsets avoiding index 0, so both parts are
    # nonempty and each unordered bipartition is visited once
    for mask in range(1, 1 << (k - 1)):
        part2 = tuple(j + 1 for j in range(k - 1) if mask >> j & 1)
        part1 = tuple(i for i in range(k) if i not in set(part2))
        result = check_bipartition_general(
            arrangement, monodromy, Bipartition(part1, part2)
        )
        if result.status == "fired":
            return result
    return CriterionResult(
        "bipartition-general",
        "inconclusive",
        detail="no bipartition satisfies both conditions (exhaustive search)",
    )


def check_irreducible_shelter(arrangement, monodromy, flat):
    """Partial vanishing from an irreducible flat contained in no resonant flat.

    Fires iff no resonant flat contains the given irreducible flat; the
    conclusion is (n+1-r)-vanishing, full nonresonance only in the rank-1
    case (a hyperplane outside every resonant flat).
    """
    _validate_pair(arrangement, monodromy)
    if not is_irreducible(arrangement, flat):
        raise ValueError("shelter criterion requires an irreducible flat")
    rf = resonant_flats(arrangement, monodromy)
    shelter = set(flat.members)
    for res in rf:
        if shelter <= set(res.members):
            return CriterionResult(
                "shelter",
                "inconclusive",
                witness=res,
                detail="a resonant flat contains the candidate flat",
            )
    n = arrangement.ambient_dim
    level = max(n + 1 - flat.rank, 0)
    return _fired("shelter", level, n, ShelterCertificate(flat))


def _search_shelter(arrangement, monodromy):
    n = arrangement.ambient_dim
    best = None
    for flat in arrangement.lattice():
        if not 1 <= flat.rank <= n:
            continue
        if not is_irreducible(arrangement, flat):
            continue
        result = check_irreducible_shelter(arrangement, monodromy, flat)
        if result.status == "fired":
            if best is None or result.conclusion.level > best.conclusion.level:
                best = result
    if best is not None:
        return best
    return CriterionResult(
        "shelter",
        "inconclusive",
        detail="every irreducible flat of rank <= n lies inside some resonant flat",
    )


def run_all(arrangement, monodromy, partition=None):
    """Run every applicable criterion and report the strongest vanishing level.

    The general bipartition criterion checks a supplied partition if given,
    otherwise brute-forces all bipartitions for arrangements of at most
    MAX_BRUTE_PARTITION hyperplanes.  Criteria never establish resonance, so
    an all-inconclusive report is just that: inconclusive.
    """
    _validate_pair(arrangement, monodromy)
    n = arrangement.ambient_dim
    results = [
        check_cdo(arrangement, monodromy),
        check_lambda_criterion(arrangement, monodromy),
    ]
    if n == 2:
        results.append(check_unique_resonant_point(arrangement, monodromy))
        found = search_bipartition_lines(arrangement, monodromy)
        if found is None:
            results.append(
                CriterionResult(
                    "bipartition",
                    "inconclusive",
                    detail="nontrivial lines meet fewer than two resonance components",
                )
            )
        else:
            results.append(check_bipartition_lines(arrangement, monodromy, found))
    if partition is not None:
        results.append(check_bipartition_general(arrangement, monodromy, partition))
    elif len(arrangement) <= MAX_BRUTE_PARTITION:
        results.append(_search_bipartition_general(arrangement, monodromy))
    else:
        results.append(
            CriterionResult(
                "bipartition-general",
                "inconclusive",
                detail="no partition supplied and arrangement too large for brute force",
            )
        )
    results.append(_search_shelter(arrangement, monodromy))
    best = 0
    nonres = False
    for r in results:
        if r.status == "fired":
            best = max(best, r.conclusion.level)
            nonres = nonres or r.conclusion.nonresonant
    return CriterionReport(
        ambient_dim=n,
        results=tuple(results),
        best_level=best,
        nonresonant=nonres,
    )
