import random
from itertools import product

import pytest

from liecensus.dvr import tser, zmod
from liecensus.fields import GF
from liecensus.modules import (
    aut_generators,
    aut_order,
    aut_order_value,
    aut_polynomial,
    automorphisms,
    chain_count,
    hall_number,
    hall_polynomial,
    hall_table,
    identity_aut,
    induced_image_order,
    induced_kernel_order,
    induced_pairs,
    lam_groups,
    module,
    pair_in_image,
    pair_section,
    partitions,
    poly_eval_int,
)


def test_partitions():
    assert partitions(0) == ((),)
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert lam_groups((3, 2, 2, 1)) == ((3, 2, 1), (1, 2, 1))


def test_module_classification():
    M = module(zmod(2, 2), (2, 1))
    assert M.size == 8
    full = frozenset(M.elements())
    assert M.subset_type(full) == (2, 1)
    assert M.quotient_type(full) == ()
    zero = frozenset([0])
    assert M.subset_type(zero) == ()
    assert M.quotient_type(zero) == (2, 1)


def test_hall_examples():
    # the three order-2 subgroups of the Klein four-group
    assert hall_number((1, 1), (1,), (1,), zmod(2, 1)) == 3
    # unique submodule isomorphic to M_(1) inside a cyclic module
    for q in (2, 3, 5):
        assert hall_number((2,), (1,), (1,), zmod(q, 2)) == 1
    # cardinality obstruction
    assert hall_number((2,), (2,), (1,), zmod(2, 2)) == 0


def test_chain_examples():
    assert chain_count((2, 1), ((2, 1),), zmod(2, 2)) == 1
    # four order-3 subgroups of (Z/3)^2
    assert chain_count((1, 1), ((1,), (1,)), zmod(3, 1)) == 4
    assert chain_count((1, 1), ((1,), (1, 1)), zmod(3, 1)) == 0


@pytest.mark.parametrize("p", [2, 3])
def test_ring_independence_small(p):
    for w in range(1, 4):
        for lam in partitions(w):
            K = lam[0]
            assert hall_table(("zmod", p, K), lam) == hall_table(("tser", p, K), lam)


def test_hall_symmetry():
    for lam in partitions(3):
        table = hall_table(("zmod", 2, lam[0]), lam)
        for (mu, nu), cnt in table.items():
            assert table[(nu, mu)] == cnt


def test_hall_polynomial_examples():
    assert hall_polynomial((1, 1), (1,), (1,)) == (1, 1)  # q + 1
    assert hall_polynomial((2,), (1,), (1,)) == (1,)
    assert hall_polynomial((2,), (2,), (1,)) == (0,)


def test_hall_polynomial_matches_counts():
    for lam in partitions(3):
        for wm in range(4):
            for mu in partitions(wm):
                for nu in partitions(3 - wm):
                    poly = hall_polynomial(lam, mu, nu)
                    for p in (2, 3):
                        assert poly_eval_int(poly, p) == hall_number(
                            lam, mu, nu, zmod(p, lam[0])
                        )


def test_aut_order_examples():
    assert aut_order((1,), zmod(3, 1)) == 2
    assert aut_order((1, 1), zmod(2, 1)) == 6  # |GL_2(2)|
    assert aut_order((2,), zmod(2, 2)) == 2    # units of Z/4
    assert aut_order_value((2, 1), 2) == 8
    assert aut_order_value((1, 1, 1), 2) == 168


def test_aut_order_vs_group_automorphism_bruteforce():
    # independent oracle: count additive automorphisms of Z/4 + Z/2 directly
    # (pairs of images of the generators preserving orders and generation)
    elements = [(a, b) for a in range(4) for b in range(2)]

    def order(x):
        k = 1
        y = x
        while y != (0, 0):
            y = ((y[0] + x[0]) % 4, (y[1] + x[1]) % 2)
            k += 1
        return k

    count = 0
    for ga in elements:
        if order(ga) != 4:
            continue
        for gb in elements:
            if order(gb) != 2:
                continue
            span = set()
            for i in range(4):
                for j in range(2):
                    span.add(((i * ga[0] + j * gb[0]) % 4, (i * ga[1] + j * gb[1]) % 2))
            if len(span) == 8:
                count += 1
    assert count == 8
    assert aut_order((2, 1), zmod(2, 2)) == count


def test_aut_stream_is_group():
    for lam, p in [((2, 1), 2), ((2,), 3), ((1, 1), 3), ((3, 1), 2)]:
        ring = zmod(p, lam[0])
        auts = list(automorphisms(lam, ring))
        assert len(auts) == aut_order_value(lam, p)
        aut_set = {a.params for a in auts}
        rng = random.Random(17)
        for _ in range(200):
            a = rng.choice(auts)
            b = rng.choice(auts)
            assert a.compose(b).params in aut_set
            assert a.inverse().params in aut_set
        ident = identity_aut(lam, ring)
        a = rng.choice(auts)
        assert a.compose(a.inverse()).params == ident.params


def test_aut_acts_as_module_automorphism():
    lam, p = (2, 1), 3
    ring = zmod(p, 2)
    M = module(ring, lam)
    for h in list(automorphisms(lam, ring))[:50]:
        imgs = [h.apply(x) for x in M.elements()]
        assert sorted(imgs) == list(M.elements())  # bijective
        for x in range(0, M.size, 3):
            for y in range(0, M.size, 5):
                assert h.apply(M.add(x, y)) == M.add(h.apply(x), h.apply(y))
        # commutes with the ring action on a generator
        g0 = M.generator(0)
        assert h.apply(M.t_mul(g0)) == M.t_mul(h.apply(g0))


def test_aut_generators_generate():
    for lam, p in [((2, 1), 2), ((1, 1), 3), ((2,), 3), ((2, 2), 2)]:
        ring = zmod(p, lam[0])
        gens = aut_generators(lam, ring)
        seen = {identity_aut(lam, ring).params}
        frontier = [identity_aut(lam, ring)]
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = g.compose(a)
                    if b.params not in seen:
                        seen.add(b.params)
                        new.append(b)
            frontier = new
        assert len(seen) == aut_order_value(lam, p)


def test_aut_polynomial_matches_stream():
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        poly = aut_polynomial(lam)
        for p in (2, 3):
            assert poly_eval_int(poly, p) == aut_order(lam, zmod(p, lam[0]))


def test_induced_pair_examples():
    lam, p = (2, 1), 3
    ring = zmod(p, 2)
    ident = identity_aut(lam, ring)
    I2 = ((1, 0), (0, 1))
    assert ident.induced_pair() == (I2, I2)
    # a scalar unit c acts as (c mod p) on both reductions
    scalar = [list(r) for r in ident.params]
    scalar[0][0] = 2
    scalar[1][1] = 2
    from liecensus.modules import ModuleAut, _aut_context

    h = ModuleAut(_aut_context(ring.key(), lam), tuple(tuple(r) for r in scalar))
    Y, Z = h.induced_pair()
    assert Y == ((2, 0), (0, 2)) and Z == ((2, 0), (0, 2))


@pytest.mark.parametrize("lam,p", [((2, 1), 2), ((2, 1), 3), ((1, 1), 2), ((3, 1), 2)])
def test_induced_image_exhaustive(lam, p):
    ring = zmod(p, lam[0])
    F = GF(p)
    _, us = lam_groups(lam)
    got = {h.induced_pair() for h in automorphisms(lam, ring)}
    want = set(induced_pairs(us, F))
    assert got == want
    assert len(got) == induced_image_order(lam, p)
    assert aut_order_value(lam, p) == len(got) * induced_kernel_order(lam, p)
    for Y, Z in got:
        assert pair_in_image(us, Y, Z, F)
        h = pair_section(lam, ring, Y, Z)
        assert h.induced_pair() == (Y, Z)


def test_pair_criterion_rejects():
    F = GF(3)
    # r = 1 (homocyclic): any Y != Z is rejected
    Y = ((1, 0), (0, 1))
    Z = ((1, 1), (0, 1))
    assert not pair_in_image((2,), Y, Z, F)
    assert pair_in_image((2,), Y, Y, F)
