import random

import pytest

from liecensus.dvr import tser, zmod


def test_valuation_examples():
    R = zmod(3, 3)  # Z/27
    assert R.val(3) == 1
    assert R.val(0) == 3  # the zero sentinel equals the cap
    assert R.val(9) == 2
    assert R.val(4) == 0
    assert zmod(3, 2).is_unit(4)  # gcd(4, 9) = 1


def test_uniformizer_nilpotent():
    for R in (zmod(2, 3), zmod(5, 2), tser(4, 2), tser(3, 3)):
        t = R.t
        x = 1
        for _ in range(R.K):
            x = R.mul(x, t)
        assert x == 0
        assert R.t_pow(R.K) == 0


@pytest.mark.parametrize("R", [zmod(2, 3), zmod(3, 2), tser(2, 3), tser(4, 2), tser(9, 2)])
def test_ring_axioms_random(R):
    rng = random.Random(55 + R.size)
    for _ in range(500):
        a, b, c = (rng.randrange(R.size) for _ in range(3))
        assert R.add(a, b) == R.add(b, a)
        assert R.mul(a, b) == R.mul(b, a)
        assert R.add(R.add(a, b), c) == R.add(a, R.add(b, c))
        assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
        assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
        assert R.add(a, R.neg(a)) == 0


@pytest.mark.parametrize("R", [zmod(3, 3), tser(4, 2), tser(2, 4)])
def test_units_and_inverses(R):
    units = [a for a in R.elements() if R.is_unit(a)]
    # units are exactly the valuation-0 elements
    assert all(R.val(a) == 0 for a in units)
    assert all(R.val(a) > 0 for a in R.elements() if a not in set(units))
    for a in units:
        assert R.mul(a, R.inv(a)) == 1


def test_t_quotient_roundtrip():
    for R in (zmod(2, 4), tser(3, 3)):
        for a in R.elements():
            for k in range(R.K + 1):
                if R.val(a) >= k:
                    assert R.mul(R.t_pow(k), R.t_quotient(a, k)) == a
