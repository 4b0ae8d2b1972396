"""Independent topological oracle for complexified real line arrangements.

The pipeline: decone at a member line, shear the affine picture so the sweep
is generic, read off the wiring diagram, produce the sweep presentation of
the fundamental group of the complexified complement, and compute twisted
first homology by Fox calculus over an exact cyclotomic field.  None of the
combinatorial criteria enter anywhere; this is the check they are judged
against.

Degrees: h1 here is dim H_1 with coefficients in the dual local system
(the representation sends each meridian to the inverse monodromy value),
which for these unimodular systems computes the h^1 the criteria predict;
h2 comes from the Euler characteristic, which twisting does not change.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from .arrangement import euler_characteristic
from .constructions import decone
from .cyclo import CycloField, cyclo_rank

__all__ = [
    "WiringVertex",
    "WiringDiagram",
    "GroupPresentation",
    "CohomologyDims",
    "OracleReport",
    "wiring_diagram",
    "presentation",
    "conjugate_relator",
    "fox_jacobian",
    "twisted_cohomology",
]


@dataclass(frozen=True)
class WiringVertex:
    """A multi-crossing: sweep coordinate, top position of its block, and the
    lines through it ordered top-to-bottom just left of the crossing."""

    sweep: Fraction
    position: int
    lines: tuple

    @property
    def multiplicity(self):
        return len(self.lines)


@dataclass(frozen=True)
class WiringDiagram:
    wires: tuple  # line ids top-to-bottom at the far left
    vertices: tuple
    shear: Fraction


@dataclass(frozen=True)
class GroupPresentation:
    """Generators are meridians, one per affine line; words are tuples of
    nonzero ints, sign for inversion, abs value = generator id (1-based)."""

    n_generators: int
    relators: tuple


@dataclass(frozen=True)
class CohomologyDims:
    h0: int
    h1: int
    h2: int

    def as_tuple(self):
        return (self.h0, self.h1, self.h2)


@dataclass(frozen=True)
class OracleReport:
    dims: CohomologyDims
    chi: int
    decone_at: str
    level: int
    generators: int
    relators: int


def _intersection(line_a, line_b):
    """Intersection point of two affine lines in the chart, or None if parallel."""
    a0, (a1, a2) = line_a.constant, line_a.coeffs
    b0, (b1, b2) = line_b.constant, line_b.coeffs
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    t1 = (-a0 * b2 + a2 * b0) / det
    t2 = (-a1 * b0 + a0 * b1) / det
    return (t1, t2)


def _shear_candidates():
    yield Fraction(0)
    for k in count(1):
        yield Fraction(k)
        yield Fraction(-k)
        yield Fraction(1, k + 1)


def _shear_is_valid(lines, points, shear):
    for ln in lines:
        if ln.coeffs[1] - shear * ln.coeffs[0] == 0:
            return False
    sweeps = [p[0] + shear * p[1] for p in points]
    return len(set(sweeps)) == len(sweeps)


def wiring_diagram(affine, shear=None):
    """Wiring diagram of a real affine line arrangement.

    Coordinates are sheared exactly (x = t1 + shear*t2) so no line is
    vertical and distinct vertices get distinct sweep coordinates; the wire
    order is tracked by evaluating exact heights between vertices and every
    crossing block is checked to be consecutive.
    """
    if affine.ambient_dim != 2:
        raise ValueError("wiring diagrams require an affine plane arrangement")
    lines = affine.lines
    g = len(lines)
    points = []
    seen = set()
    for i in range(g):
        for j in range(i + 1, g):
            p = _intersection(lines[i], lines[j])
            if p is not None and p not in seen:
                seen.add(p)
                points.append(p)
    if shear is None:
        for candidate in _shear_candidates():
            if _shear_is_valid(lines, points, candidate):
                shear = candidate
                break
    else:
        shear = Fraction(shear)
        if not _shear_is_valid(lines, points, shear):
            raise ValueError("supplied shear is degenerate for this arrangement")
    # after the shear: y = slope*x + intercept per line
    slopes = []
    intercepts = []
    for ln in lines:
        a0, (a1, a2) = ln.constant, ln.coeffs
        denom = a2 - shear * a1
        slopes.append(-a1 / denom)
        intercepts.append(-a0 / denom)

    def order_at(x):
        heights = [(slopes[i] * x + intercepts[i], i) for i in range(g)]
        heights.sort(key=lambda t: (-t[0], t[1]))
        return [i for _, i in heights]

    vertex_data = []
    for p in points:
        through = tuple(
            i
            for i, ln in enumerate(lines)
            if ln.constant + ln.coeffs[0] * p[0] + ln.coeffs[1] * p[1] == 0
        )
        vertex_data.append((p[0] + shear * p[1], through))
    vertex_data.sort(key=lambda t: t[0])
    sweeps = [s for s, _ in vertex_data]
    pair_count = sum(len(t) * (len(t) - 1) // 2 for _, t in vertex_data)
    crossing_pairs = sum(
        1
        for i in range(g)
        for j in range(i + 1, g)
        if _intersection(lines[i], lines[j]) is not None
    )
    if pair_count != crossing_pairs:
        raise ArithmeticError("vertex multiplicities do not account for all crossings")
    left_x = (sweeps[0] - 1) if sweeps else Fraction(0)
    wires = tuple(order_at(left_x))
    current = list(wires)
    vertices = []
    for idx, (sweep, through) in enumerate(vertex_data):
        sample = (
            (sweeps[idx - 1] + sweep) / 2 if idx > 0 else sweep - 1
        )
        if current != order_at(sample):
            raise ArithmeticError("tracked wire order disagrees with exact heights")
        positions = sorted(current.index(i) for i in through)
        top = positions[0]
        k = len(through)
        if positions != list(range(top, top + k)):
            raise ArithmeticError("crossing lines are not consecutive in the order")
        block = tuple(current[top : top + k])
        vertices.append(WiringVertex(sweep=sweep, position=top, lines=block))
        current[top : top + k] = reversed(current[top : top + k])
    if sweeps and current != order_at(sweeps[-1] + 1):
        raise ArithmeticError("final wire order disagrees with exact heights")
    return WiringDiagram(wires=wires, vertices=tuple(vertices), shear=shear)


def _invert(word):
    return tuple(-x for x in reversed(word))


def _reduce(word):
    out = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def presentation(diagram):
    """Sweep presentation of the fundamental group from a wiring diagram.

    One meridian word per wire position, initialized to the generators; a
    vertex of multiplicity k with local words a1..ak (top to bottom) emits
    the relators [a1...ak, aj] for j < k, and the half-twist sends the wire
    at local position j to position k+1-j with word (a1...a_{j-1}) aj
    (a1...a_{j-1})^{-1}.
    """
    g = len(diagram.wires)
    words = [None] * g
    for pos, line in enumerate(diagram.wires):
        words[pos] = (line + 1,)
    relators = []
    for vertex in diagram.vertices:
        s = vertex.position
        k = vertex.multiplicity
        local = words[s : s + k]
        product = _reduce(tuple(x for w in local for x in w))
        inv_product = _invert(product)
        for j in range(k - 1):
            rel = _reduce(product + local[j] + inv_product + _invert(local[j]))
            relators.append(rel)
        prefix = ()
        updated = [None] * k
        for j in range(1, k + 1):
            word = _reduce(prefix + local[j - 1] + _invert(prefix))
            updated[k - j] = word
            prefix = _reduce(prefix + local[j - 1])
        words[s : s + k] = updated
    return GroupPresentation(n_generators=g, relators=tuple(relators))


def conjugate_relator(relator, word):
    """Replace r by w r w^{-1}; twisted H_1 must not change (used by tests)."""
    w = _reduce(tuple(word))
    return _reduce(w + tuple(relator) + _invert(w))


def _fox_row(word, rho, rho_inv, field):
    row = [field.zero() for _ in rho]
    prefix = field.one()
    for letter in word:
        idx = abs(letter) - 1
        if letter > 0:
            row[idx] = row[idx] + prefix
            prefix = prefix * rho[idx]
        else:
            prefix = prefix * rho_inv[idx]
            row[idx] = row[idx] - prefix
    return row


def fox_jacobian(pres, rho, field):
    """Fox derivative matrix of the relators at a scalar representation.

    Raises if the fundamental identity (each row times (rho - 1)) fails,
    which would mean the presentation or the evaluation is broken.
    """
    rho_inv = [r.inverse() for r in rho]
    rows = []
    for rel in pres.relators:
        row = _fox_row(rel, rho, rho_inv, field)
        check = field.zero()
        for j in range(pres.n_generators):
            check = check + row[j] * (rho[j] - field.one())
        if check:
            raise ArithmeticError("Fox fundamental identity failed for a relator")
        rows.append(row)
    return rows


def twisted_cohomology(arrangement, monodromy, decone_at=0, shear=None):
    """Betti numbers (h0, h1, h2) of the complement with local coefficients.

    h0 is 1 exactly for the trivial system; h1 comes from the Fox Jacobian
    rank over Q(zeta_N) at the inverse representation; h2 closes the Euler
    characteristic, which equals the untwisted one.
    """
    if arrangement.ambient_dim != 2:
        raise ValueError("the oracle handles line arrangements in P^2")
    if len(monodromy) != len(arrangement):
        raise ValueError("monodromy exponent count does not match the arrangement")
    affine = decone(arrangement, decone_at)
    diagram = wiring_diagram(affine, shear=shear)
    pres = presentation(diagram)
    level = monodromy.level()
    field = CycloField(level)
    exps = [monodromy.exponents[orig] for orig in affine.original_indices]
    rho = [field.zeta(-int(q * level)) for q in exps]
    one = field.one()
    h0 = 1 if monodromy.is_trivial() else 0
    rank_d1 = 0 if all(r == one for r in rho) else 1
    if pres.relators:
        jac = fox_jacobian(pres, rho, field)
        rank_j = cyclo_rank(jac)
    else:
        rank_j = 0
    h1 = (pres.n_generators - rank_d1) - rank_j
    chi = euler_characteristic(arrangement)
    h2 = chi + h1 - h0
    if h1 < 0 or h2 < 0:
        raise ArithmeticError("negative Betti number: oracle inconsistency")
    dims = CohomologyDims(h0=h0, h1=h1, h2=h2)
    return OracleReport(
        dims=dims,
        chi=chi,
        decone_at=arrangement.label_of(decone_at),
        level=level,
        generators=pres.n_generators,
        relators=len(pres.relators),
    )
