import random
from collections import Counter
from itertools import product

import pytest

from liecensus.fields import GF
from liecensus.gltypes import (
    class_count_of_type,
    class_size,
    flag_stab_intersection,
    flag_total,
    gauss_binom,
    induced_pair_class_intersection,
    num_invertible_irreducibles,
    parabolic_order,
    pretype_aut_order,
    realisation_count,
    realised_class_key,
    type_key,
    type_of_tuple,
    type_projection,
)
from liecensus.linalg import companion, gl_iter, gl_order, identity, is_invertible, mat_inv, mat_mul


def test_type_examples():
    F2, F3 = GF(2), GF(3)
    assert type_of_tuple(F3, (identity(2),)) == ((1, ((1, 1),)),)
    assert type_of_tuple(F2, (companion(F2, (1, 1, 1)),)) == ((2, ((1,),)),)
    assert type_of_tuple(F3, (((1, 1), (0, 1)),)) == ((1, ((2,),)),)


def test_type_of_noninvertible_rejected():
    F2 = GF(2)
    with pytest.raises(ValueError):
        type_of_tuple(F2, (((0, 0), (0, 0)),))


def test_pretype_aut_order():
    # all columns distinct -> 1; two identical -> 2; three identical -> 6
    assert pretype_aut_order([(1, ((1,),)), (1, ((2,),))]) == 1
    assert pretype_aut_order([(1, ((1,),)), (1, ((1,),))]) == 2
    assert pretype_aut_order([(1, ((1,),))] * 3) == 6


def test_realisation_count():
    # one linear index: q - 1 usable polynomials (X appears in no unit)
    assert num_invertible_irreducibles(3, 1) == 2
    assert realisation_count(((1, ((1,),)),), 3) == 2
    # two distinct linear indices: injective assignments
    assert realisation_count(((1, ((1,), ())), (1, ((), (1,)))), 3) == 2
    # one quadratic index over F_2: the unique irreducible quadratic
    assert realisation_count(((2, ((1,),)),), 2) == 1


def test_class_count_examples():
    F3 = GF(3)
    idt = type_of_tuple(F3, (identity(2),))
    assert class_count_of_type(idt, 2) == 1
    assert class_count_of_type(idt, 3) == 2  # diag(a, a), a in {1, 2}
    ss = type_of_tuple(F3, (((1, 0), (0, 2)),))
    assert class_count_of_type(ss, 3) == 1   # only {1, 2} as eigenvalue set


def test_class_size_examples():
    F2, F3 = GF(2), GF(3)
    idt = type_of_tuple(F2, (identity(2),))
    assert class_size(idt, 2) == 1
    unip = type_of_tuple(F2, (((1, 1), (0, 1)),))
    assert class_size(unip, 2) == 3
    ss = type_of_tuple(F3, (((1, 0), (0, 2)),))
    assert class_size(ss, 3) == 12


def test_type_projection():
    cols = type_key([(1, ((1,), (1,))), (2, ((), (1,)))])
    assert type_projection(cols, [0, 1]) == cols
    # dropping the second component removes the index dead in the first
    assert type_projection(cols, [0]) == ((1, ((1,),)),)


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_classification_against_bruteforce(q, n):
    F = GF(q)
    classes = Counter()
    for g in gl_iter(F, n):
        classes[realised_class_key(F, (g,))] += 1
    by_type = Counter()
    for key, size in classes.items():
        cols = type_key([(len(f) - 1, parts) for f, parts in key])
        by_type[cols] += 1
        assert size == class_size(cols, q)
    for cols, cnt in by_type.items():
        assert cnt == class_count_of_type(cols, q)
    assert sum(classes.values()) == gl_order(n, q)


def test_tuple_classification_two_components():
    q = 3
    F = GF(q)
    classes = Counter()
    g1s = list(gl_iter(F, 1))
    g2s = list(gl_iter(F, 2))
    for a in g1s:
        for b in g2s:
            classes[realised_class_key(F, (a, b))] += 1
    by_type = Counter()
    for key, size in classes.items():
        cols = type_key([(len(f) - 1, parts) for f, parts in key])
        by_type[cols] += 1
        assert size == class_size(cols, q)
    for cols, cnt in by_type.items():
        assert cnt == class_count_of_type(cols, q)
    assert sum(classes.values()) == gl_order(1, q) * gl_order(2, q)


def test_conjugation_invariance_random():
    q = 3
    F = GF(q)
    rng = random.Random(2024)
    gl2 = list(gl_iter(F, 2))
    for _ in range(1000):
        g = rng.choice(gl2)
        c = rng.choice(gl2)
        conj = mat_mul(F, mat_mul(F, c, g), mat_inv(F, c))
        assert type_of_tuple(F, (g,)) == type_of_tuple(F, (conj,))


def test_gauss_binom_and_flags():
    assert gauss_binom(2, 1, 2) == 3
    assert gauss_binom(4, 2, 11) == 16236
    assert flag_total((1, 1), 2) == 3
    assert flag_total((1, 1, 1), 3) == 13 * 4 * 1
    assert parabolic_order((1, 1), 3) == 2 * 2 * 3


def test_flag_fix_examples():
    # identity on F_2^2, full flag: all three lines are fixed
    cols = type_key([(1, ((1, 1), (1,), (1,)))])
    # fixed flags = chain count = lines of F_2^2 = 3; intersection with the
    # Borel: class size 1 * 3 / |S|=3 flags = 1
    assert flag_stab_intersection(cols, (1, 1), 2) == 1
    # regular semisimple with two rational eigenvalues: two fixed flags
    cols2 = type_key(
        [(1, ((1,), (1,), ())), (1, ((1,), (), (1,)))]
    )
    val = flag_stab_intersection(cols2, (1, 1), 3)
    # brute force: upper-triangular with distinct diagonal (a, b), a != b
    F = GF(3)
    count = 0
    target = None
    for a, b in product((1, 2), (1, 2)):
        if a == b:
            continue
        for u in range(3):
            g = ((a, u), (0, b))
            key = realised_class_key(F, (g, ((a,),), ((b,),)))
            if target is None:
                target = key
    assert val == 3  # 3 unipotent-free Borel elements per eigenvalue order


def test_class_partition_of_gl_via_types():
    # sum over types of count * size = |GL_n(q)|
    q, n = 3, 3
    F = GF(q)
    classes = Counter()
    for g in gl_iter(F, n):
        classes[realised_class_key(F, (g,))] += 1
    total = 0
    for key in classes:
        cols = type_key([(len(f) - 1, parts) for f, parts in key])
        total += class_size(cols, q)
    assert total == gl_order(n, q)
