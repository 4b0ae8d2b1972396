import random
from fractions import Fraction

import pytest

from nonres._kernels import BACKEND, _pure, backends


def _random_int_matrix(rng, rows, cols, bound=9, rank_deficient=False):
    m = [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
    if rank_deficient and rows >= 2:
        scale = rng.randint(-3, 3)
        m[-1] = [scale * x for x in m[0]]
    return m


def test_backend_reported():
    assert BACKEND in ("pure", "compiled")


@pytest.mark.skipif("compiled" not in backends(), reason="extension not built")
def test_bareiss_rank_agreement():
    compiled = backends()["compiled"]
    rng = random.Random(20240811)
    for trial in range(200):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = _random_int_matrix(rng, rows, cols, rank_deficient=trial % 3 == 0)
        assert _pure.bareiss_rank(m) == compiled.bareiss_rank(m)


@pytest.mark.skipif("compiled" not in backends(), reason="extension not built")
def test_poly_mul_reduce_agreement():
    compiled = backends()["compiled"]
    rng = random.Random(77)
    for _ in range(100):
        deg = rng.randint(1, 8)
        red_rows = [
            [Fraction(rng.randint(-3, 3)) for _ in range(deg)]
            for _ in range(max(deg - 1, 1))
        ]
        a = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(deg)]
        b = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(deg)]
        assert _pure.poly_mul_reduce(a, b, red_rows, deg) == compiled.poly_mul_reduce(
            a, b, red_rows, deg
        )


def test_bareiss_rank_known_values():
    assert _pure.bareiss_rank([[2, 0], [0, 5]]) == 2
    assert _pure.bareiss_rank([[1, 2, 3], [2, 4, 6], [0, 0, 1]]) == 2
    assert _pure.bareiss_rank([[0, 0], [0, 0]]) == 0
    assert _pure.bareiss_rank([]) == 0
