import random
from decimal import Decimal, localcontext

import pytest

from uc_spectra.ramanujan.bounds import le_two_sqrt, within_ramanujan_bound


def _le_two_sqrt_decimal(a: int, b: int) -> bool:
    with localcontext() as context:
        context.prec = 60
        return Decimal(a) <= 2 * Decimal(b).sqrt()


@pytest.mark.parametrize(
    "a,b,expected",
    [(0, 0, True), (-5, 0, True), (-1, -1, False), (4, 4, True), (5, 6, False), (6, 9, True)],
)
def test_le_two_sqrt_edges(a, b, expected):
    assert le_two_sqrt(a, b) is expected


def test_le_two_sqrt_matches_high_precision_evaluation():
    rng = random.Random(20240601)
    for _ in range(20000):
        a, b = rng.randint(0, 10**6), rng.randint(0, 10**6)
        assert le_two_sqrt(a, b) == _le_two_sqrt_decimal(a, b)


def test_le_two_sqrt_exact_at_perfect_squares():
    for k in range(1, 2000):
        assert le_two_sqrt(2 * k, k * k)
        assert not le_two_sqrt(2 * k + 1, k * k)


def test_within_ramanujan_bound():
    assert within_ramanujan_bound(-12, 37)
    assert not within_ramanujan_bound(-12, 24)
    assert within_ramanujan_bound(2, 4)
