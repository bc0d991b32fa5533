import random

import pytest

from liecensus.fields import (
    GF,
    irreducibles,
    is_prime,
    mobius,
    num_irreducibles,
    pdeg,
    peval,
    pmul,
    pmod,
    prime_power,
    prime_powers,
)


def test_prime_helpers():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(12) is None
    assert prime_powers(6) == [2, 3, 4, 5, 7, 8]
    assert [mobius(n) for n in range(1, 7)] == [1, -1, -1, 0, -1, 1]


def test_irreducibles_small():
    F2 = GF(2)
    assert irreducibles(F2, 1) == [(0, 1), (1, 1)]
    assert irreducibles(F2, 2) == [(1, 1, 1)]
    assert len(irreducibles(GF(3), 2)) == 3


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_irreducible_count_moebius(q, d):
    # independent count: (1/d) sum_{e|d} mu(e) q^(d/e)
    assert len(irreducibles(GF(q), d)) == num_irreducibles(q, d)


def test_modulus_is_lex_least():
    # GF(4) is built on the lex-least monic irreducible quadratic over F_2
    assert GF(4).modulus == (1, 1, 1)
    assert GF(9).modulus == irreducibles(GF(3), 2)[0]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_field_axioms_random(q):
    F = GF(q)
    rng = random.Random(1234 + q)
    for _ in range(1000):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


def test_poly_arithmetic():
    F = GF(3)
    f = (1, 2, 1)  # 1 + 2X + X^2
    g = (2, 1)     # 2 + X
    assert pdeg(pmul(F, f, g)) == 3
    assert pmod(F, pmul(F, f, g), g) == ()
    assert peval(F, f, 1) == (1 + 2 + 1) % 3


def test_irreducibles_have_no_roots():
    for q in (2, 3, 4, 5):
        F = GF(q)
        for d in (2, 3):
            for f in irreducibles(F, d):
                assert all(peval(F, f, x) != 0 for x in F.elements())
