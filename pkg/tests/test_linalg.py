from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonres.corpus import load
from nonres.linalg import (
    RatMatrix,
    format_rational,
    nullspace,
    parse_rational,
    rat_rank,
)


def test_parse_rational_forms():
    assert parse_rational("3") == 3
    assert parse_rational("-7/2") == Fraction(-7, 2)
    assert parse_rational(" 0 ") == 0
    assert parse_rational("4/2") == 2


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1/2/3", "3/-4", "1.5", "2/", "/3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_rational_zero_denominator_message():
    with pytest.raises(ValueError, match="zero denominator"):
        parse_rational("1/0")


def test_format_round_trip():
    for q in [Fraction(3, 4), Fraction(-5), Fraction(0), Fraction(7, 1)]:
        assert parse_rational(format_rational(q)) == q
    assert format_rational(Fraction(3, 1)) == "3"
    assert format_rational(Fraction(-3, 4)) == "-3/4"


def test_rat_matrix_validation():
    m = RatMatrix([[1, 2], [3, 4]])
    assert (m.rows, m.cols) == (2, 2)
    with pytest.raises(ValueError):
        RatMatrix([[1, 2], [3]])


def test_rank_identity():
    assert rat_rank([[1, 0], [0, 1]]) == 2


def test_rank_proportional_rows():
    assert rat_rank([[1, 2], [2, 4]]) == 1


def test_rank_e3_coefficient_matrix():
    arrangement, _ = load("E3")
    rows = [list(h.coeffs) for h in arrangement.hyperplanes]
    assert rat_rank(rows) == 3


def test_rank_handles_fractions():
    assert rat_rank([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 2), Fraction(1)]]) == 2
    assert rat_rank([[Fraction(1, 2), Fraction(1, 4)], [Fraction(2), Fraction(1)]]) == 1


def test_nullspace_single_row():
    basis = nullspace([[1, 0, 0]])
    assert len(basis) == 2
    for v in basis:
        assert v[0] == 0


def test_nullspace_identity_empty():
    assert nullspace([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []


def test_nullspace_symmetric_row():
    basis = nullspace([[1, 1, 1]])
    assert len(basis) == 2
    target = (Fraction(1), Fraction(-1), Fraction(0))

    def proportional(u, v):
        for i in range(3):
            if u[i]:
                scale = v[i] / u[i]
                return all(v[j] == scale * u[j] for j in range(3))
        return not any(v)

    assert any(proportional(target, v) for v in basis)


def _gauss_rank_reference(rows):
    # plain Fraction elimination, independent of the Bareiss kernel
    m = [list(map(Fraction, r)) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


small_fracs = st.fractions(
    min_value=-5, max_value=5, max_denominator=4
)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(small_fracs, min_size=1, max_size=5),
        min_size=1,
        max_size=5,
    ).filter(lambda rows: len({len(r) for r in rows}) == 1)
)
def test_rank_matches_reference_and_nullity(rows):
    cols = len(rows[0])
    rank = rat_rank(rows)
    assert rank == _gauss_rank_reference(rows)
    basis = nullspace(rows)
    assert rank + len(basis) == cols
    for v in basis:
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0
