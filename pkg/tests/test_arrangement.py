from fractions import Fraction
from itertools import combinations

import pytest

from nonres.arrangement import (
    Arrangement,
    Flat,
    closure,
    enumerate_lattice,
    euler_characteristic,
    irreducible_decomposition,
    is_irreducible,
    localization,
    normalize_form,
    poincare_polynomial,
    restriction,
)
from nonres.corpus import NAMES, load


@pytest.fixture(scope="module")
def corpus():
    return {name: load(name) for name in NAMES}


def test_normalize_form():
    assert normalize_form([0, 2, -4]) == (0, 1, -2)
    with pytest.raises(ValueError):
        normalize_form([0, 0, 0])


def test_duplicate_hyperplanes_rejected():
    with pytest.raises(ValueError, match="duplicates"):
        Arrangement(2, [[1, 0, 0], [2, 0, 0]])


def test_wrong_length_rejected():
    with pytest.raises(ValueError, match="coefficients"):
        Arrangement(2, [[1, 0]])


def test_closure_singleton(corpus):
    a1, _ = corpus["E1"]
    flat = closure(a1, (0,))
    assert flat.members == (0,) and flat.rank == 1


def test_closure_e3_triple(corpus):
    a3, _ = corpus["E3"]
    flat = closure(a3, (0, 1))
    assert flat.members == (0, 1, 2) and flat.rank == 2


def test_closure_e2_pencil(corpus):
    a2, _ = corpus["E2"]
    flat = closure(a2, (0, 1))
    assert flat.members == (0, 1, 2) and flat.rank == 2


def test_closure_is_a_closure_operator(corpus):
    for arrangement, _ in corpus.values():
        k = len(arrangement)
        subsets = [
            s
            for size in range(k + 1)
            for s in combinations(range(k), size)
        ]
        for s in subsets:
            c1 = arrangement.closure(s)
            # extensive
            assert set(s) <= set(c1.members)
            # idempotent
            assert arrangement.closure(c1.members) == c1
        for s in subsets:
            for t in subsets:
                if set(s) <= set(t):
                    # monotone
                    assert set(arrangement.closure(s).members) <= set(
                        arrangement.closure(t).members
                    )


def test_lattice_counts(corpus):
    expected = {"E1": 8, "E2": 5, "E3": 13, "E4": 19, "E5": 10}
    for name, (arrangement, _) in corpus.items():
        assert len(enumerate_lattice(arrangement)) == expected[name]


def test_lattice_shapes(corpus):
    a1, _ = corpus["E1"]
    lat = enumerate_lattice(a1)
    assert [len(lat.by_rank(r)) for r in range(4)] == [1, 3, 3, 1]
    a2, _ = corpus["E2"]
    lat = enumerate_lattice(a2)
    assert [len(lat.by_rank(r)) for r in range(3)] == [1, 3, 1]
    assert lat.by_rank(2)[0].members == (0, 1, 2)
    a3, _ = corpus["E3"]
    lat = enumerate_lattice(a3)
    assert [len(lat.by_rank(r)) for r in range(4)] == [1, 5, 6, 1]
    triples = [f for f in lat.by_rank(2) if len(f) == 3]
    assert [f.members for f in triples] == [(0, 1, 2), (2, 3, 4)]


def test_lattice_flats_are_exactly_closure_fixed_points(corpus):
    for arrangement, _ in corpus.values():
        lat = enumerate_lattice(arrangement)
        lattice_sets = {f.members for f in lat}
        k = len(arrangement)
        for size in range(k + 1):
            for s in combinations(range(k), size):
                c = arrangement.closure(s)
                assert c.members in lattice_sets
                if s == c.members:
                    assert Flat(s, c.rank) in set(lat.flats)


def test_rank_strictly_increases_on_containment(corpus):
    for arrangement, _ in corpus.values():
        lat = enumerate_lattice(arrangement)
        for f in lat:
            for g in lat:
                if set(f.members) < set(g.members):
                    assert f.rank < g.rank


def test_rank_nullity_relation(corpus):
    from nonres.linalg import nullspace

    for arrangement, _ in corpus.values():
        n = arrangement.ambient_dim
        for flat in enumerate_lattice(arrangement):
            if not flat.members:
                continue
            basis = nullspace(arrangement.matrix(flat.members))
            assert flat.rank == (n + 1) - len(basis)


def _brute_force_decompositions(arrangement, flat):
    """All set partitions of the flat into irreducible blocks with additive
    ranks, where irreducibility is checked straight from the definition."""

    def irreducible(members):
        if len(members) == 1:
            return True
        rank = arrangement.subset_rank(members)
        items = list(members)
        for mask in range(1, 1 << (len(items) - 1)):
            s2 = frozenset(
                items[j + 1] for j in range(len(items) - 1) if mask >> j & 1
            )
            s1 = frozenset(items) - s2
            if (
                arrangement.subset_rank(s1) + arrangement.subset_rank(s2)
                == rank
            ):
                return False
        return True

    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for sub in partitions(rest):
            for i in range(len(sub)):
                yield sub[:i] + [sub[i] + [first]] + sub[i + 1 :]
            yield sub + [[first]]

    found = []
    for part in partitions(list(flat.members)):
        blocks = [frozenset(b) for b in part]
        if sum(arrangement.subset_rank(b) for b in blocks) != flat.rank:
            continue
        if all(irreducible(b) for b in blocks):
            found.append(sorted(tuple(sorted(b)) for b in blocks))
    return found


def test_irreducible_decomposition_matches_brute_force(corpus):
    for arrangement, _ in corpus.values():
        for flat in enumerate_lattice(arrangement):
            if not flat.members:
                continue
            result = irreducible_decomposition(arrangement, flat)
            # partition with additive ranks
            together = sorted(h for f in result for h in f.members)
            assert together == list(flat.members)
            assert sum(f.rank for f in result) == flat.rank
            # each piece is again irreducible
            for piece in result:
                assert irreducible_decomposition(arrangement, piece) == (piece,)
            # independent exhaustive search: existence and uniqueness
            brute = _brute_force_decompositions(arrangement, flat)
            assert len(brute) == 1
            assert brute[0] == sorted(f.members for f in result)


def test_decomposition_examples(corpus):
    a1, _ = corpus["E1"]
    flat = a1.closure((0, 1))
    assert [f.members for f in irreducible_decomposition(a1, flat)] == [(0,), (1,)]
    a2, _ = corpus["E2"]
    top2 = a2.closure((0, 1, 2))
    assert irreducible_decomposition(a2, top2) == (top2,)
    a3, _ = corpus["E3"]
    top3 = a3.top_flat()
    assert top3.rank == 3
    assert irreducible_decomposition(a3, top3) == (top3,)


def test_decomposition_empty_flat_errors(corpus):
    a1, _ = corpus["E1"]
    with pytest.raises(ValueError):
        irreducible_decomposition(a1, Flat((), 0))


def test_decomposition_lemma_properties(corpus):
    for arrangement, _ in corpus.values():
        lat = enumerate_lattice(arrangement)
        flats_by_members = {f.members: f for f in lat}
        for flat in lat:
            if not flat.members:
                continue
            components = irreducible_decomposition(arrangement, flat)
            # (1) every irreducible subflat sits inside exactly one component
            for g in lat:
                if not g.members or not set(g.members) <= set(flat.members):
                    continue
                if not is_irreducible(arrangement, g):
                    continue
                holders = [
                    c for c in components if set(g.members) <= set(c.members)
                ]
                assert len(holders) == 1
            # (2) any union of subflats of the components is a flat
            choices = [[]]
            for comp in components:
                subflats = [
                    g.members
                    for g in lat
                    if set(g.members) <= set(comp.members)
                ]
                choices = [
                    prev + [pick] for prev in choices for pick in subflats
                ]
            for combo in choices:
                union = tuple(sorted(h for pick in combo for h in pick))
                assert arrangement.is_flat(union)


def test_localization_examples(corpus):
    a3, _ = corpus["E3"]
    f1 = a3.closure((0, 1, 2))
    local = localization(a3, f1)
    assert local.ambient_dim == 1 and len(local) == 3
    a1, _ = corpus["E1"]
    local = localization(a1, a1.closure((0, 1)))
    assert local.ambient_dim == 1 and len(local) == 2
    a2, _ = corpus["E2"]
    local = localization(a2, a2.closure((0, 1, 2)))
    assert local.ambient_dim == 1 and len(local) == 3
    with pytest.raises(ValueError):
        localization(a1, Flat((), 0))


def test_localization_lattice_bijection(corpus):
    for arrangement, _ in corpus.values():
        lat = enumerate_lattice(arrangement)
        for flat in lat:
            if not flat.members:
                continue
            local = localization(arrangement, flat)
            local_lat = enumerate_lattice(local)
            below = [g for g in lat if set(g.members) <= set(flat.members)]
            # transport local flats back through the member correspondence
            mapped = {
                tuple(flat.members[i] for i in g.members): g.rank
                for g in local_lat
            }
            assert len(mapped) == len(below)
            for g in below:
                assert mapped[g.members] == g.rank
            # order is inclusion on both sides, preserved by the index map
            for g in below:
                for h in below:
                    assert (set(g.members) <= set(h.members)) == (
                        set(g.members) <= set(h.members)
                    )


def test_restriction_examples(corpus):
    a3, _ = corpus["E3"]
    res = restriction(a3, a3.closure((2,)))
    assert res.arrangement.ambient_dim == 1 and len(res.arrangement) == 2
    assert [t.members for t in res.tags] == [(0, 1, 2), (2, 3, 4)]
    assert res.sources == ((0, 1), (3, 4))

    a1, _ = corpus["E1"]
    res = restriction(a1, a1.closure((0,)))
    assert len(res.arrangement) == 2
    assert [t.members for t in res.tags] == [(0, 1), (0, 2)]

    with pytest.raises(ValueError, match="empty"):
        restriction(a1, a1.top_flat())


def test_restriction_lattice_bijection(corpus):
    for arrangement, _ in corpus.values():
        lat = enumerate_lattice(arrangement)
        for flat in lat:
            if not flat.members or flat.rank > arrangement.ambient_dim:
                continue
            res = restriction(arrangement, flat)
            above = [g for g in lat if set(flat.members) <= set(g.members)]
            res_lat = enumerate_lattice(res.arrangement)
            assert len(res_lat) == len(above)
            # map restricted flats back: union the source hyperplanes + F
            back = {}
            for g in res_lat:
                members = set(flat.members)
                for i in g.members:
                    members.update(res.sources[i])
                pulled = arrangement.closure(tuple(members))
                back[g.members] = pulled
                assert pulled.rank == g.rank + flat.rank
            assert {f.members for f in back.values()} == {
                g.members for g in above
            }


def test_poincare_polynomials(corpus):
    expected = {
        "E1": (1, 2, 1),
        "E2": (1, 2, 0),
        "E3": (1, 4, 4),
        "E4": (1, 5, 8),
        "E5": (1, 3, 2),
    }
    for name, (arrangement, _) in corpus.items():
        assert poincare_polynomial(arrangement) == expected[name]


def test_poincare_line_arrangement_formulas(corpus):
    for arrangement, _ in corpus.values():
        b0, b1, b2 = poincare_polynomial(arrangement)
        k = len(arrangement)
        points = [
            f for f in enumerate_lattice(arrangement).by_rank(2)
        ]
        mult_sum = sum(len(f) - 1 for f in points)
        assert b0 == 1
        assert b1 == k - 1
        assert b2 == mult_sum - k + 1
        assert euler_characteristic(arrangement) == b0 - b1 + b2


def test_empty_flat_and_top_flat_present(corpus):
    for arrangement, _ in corpus.values():
        lat = enumerate_lattice(arrangement)
        assert Flat((), 0) in set(lat.flats)
        assert arrangement.top_flat() in set(lat.flats)
