import random
from fractions import Fraction

import pytest

from nonres.cyclo import MAX_LEVEL, CycloField, cyclo_rank, cyclotomic_polynomial
from nonres.linalg import rat_rank


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize(
    "n,expected",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (3, (1, 1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (12, (1, 0, -1, 0, 1)),
    ],
)
def test_cyclotomic_polynomials_known(n, expected):
    assert cyclotomic_polynomial(n) == expected


@pytest.mark.parametrize("n", list(range(1, 61)))
def test_cyclotomic_product_identity(n):
    prod = [1]
    for d in range(1, n + 1):
        if n % d == 0:
            prod = _poly_mul(prod, list(cyclotomic_polynomial(d)))
    target = [0] * (n + 1)
    target[0] = -1
    target[n] = 1
    assert prod == target


def test_level_cap():
    CycloField(MAX_LEVEL)
    with pytest.raises(ValueError):
        CycloField(MAX_LEVEL + 1)


def test_zeta_power_reduction():
    for n in (1, 2, 3, 5, 8, 12):
        field = CycloField(n)
        assert field.zeta(n) == field.one()
        assert field.zeta(-1) == field.zeta(n - 1)
        # Phi_N(zeta_N) = 0
        phi = cyclotomic_polynomial(n)
        value = field.zero()
        for k, c in enumerate(phi):
            value = value + field.zeta(k) * c
        assert not value


def test_level_one_matches_rational_rank():
    rng = random.Random(5)
    field = CycloField(1)
    for _ in range(25):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = [
            [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
            for _ in range(rows)
        ]
        wrapped = [[field.from_rational(x) for x in row] for row in m]
        assert cyclo_rank(wrapped) == rat_rank(m)


def test_zeta3_minus_one_has_rank_one():
    field = CycloField(3)
    assert cyclo_rank([[field.zeta() - 1]]) == 1


def test_commutator_fox_row_rank():
    # the Fox row of [a, b] at rho(a) = rho(b) = zeta_3 is (1 - zeta_3, zeta_3 - 1)
    field = CycloField(3)
    z = field.zeta()
    row = [field.one() - z, z - field.one()]
    assert cyclo_rank([row]) == 1


def test_inverse_round_trips():
    rng = random.Random(11)
    for level in (2, 3, 4, 5, 6, 8, 12):
        field = CycloField(level)
        for _ in range(10):
            coeffs = [
                Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                for _ in range(field.degree)
            ]
            elem = field.element(coeffs)
            if not elem:
                continue
            assert elem * elem.inverse() == field.one()


def test_rank_invariant_under_row_scaling():
    rng = random.Random(23)
    field = CycloField(6)
    for _ in range(20):
        rows = rng.randint(1, 3)
        cols = rng.randint(1, 4)
        m = [
            [field.element([rng.randint(-2, 2), rng.randint(-2, 2)]) for _ in range(cols)]
            for _ in range(rows)
        ]
        base = cyclo_rank(m)
        scale = field.zero()
        while not scale:
            scale = field.element([rng.randint(-2, 2), rng.randint(-2, 2)])
        target = rng.randrange(rows)
        scaled = [
            [scale * x for x in row] if i == target else row
            for i, row in enumerate(m)
        ]
        assert cyclo_rank(scaled) == base


def test_mixed_levels_rejected():
    f3 = CycloField(3)
    f4 = CycloField(4)
    with pytest.raises(ValueError, match="mixed"):
        cyclo_rank([[f3.one(), f4.one()]])
    with pytest.raises(ValueError):
        cyclo_rank([[f3.one()]], level=4)


def test_field_arithmetic_basics():
    field = CycloField(4)
    i = field.zeta()
    assert i * i == field.from_rational(-1)
    assert (i + 1) * (i - 1) == field.from_rational(-2)
    with pytest.raises(ZeroDivisionError):
        field.zero().inverse()
