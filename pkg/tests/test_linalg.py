import random

import pytest

from liecensus.caps import RefusalError
from liecensus.fields import GF
from liecensus.linalg import (
    charpoly,
    companion,
    det,
    exterior_square,
    gl_iter,
    gl_order,
    identity,
    is_invertible,
    kernel_dim,
    mat_inv,
    mat_mul,
    poly_apply,
    rank,
)


def test_kernel_dim_examples():
    F2 = GF(2)
    zero3 = tuple((0,) * 3 for _ in range(3))
    assert kernel_dim(F2, zero3) == 3
    assert kernel_dim(F2, identity(4)) == 0
    # [[1,1],[0,0]] over F_2: kernel {(0,0),(1,1)} has dimension 1
    assert kernel_dim(F2, ((1, 1), (0, 0))) == 1


@pytest.mark.parametrize("q", [2, 3, 5])
def test_rank_nullity(q):
    F = GF(q)
    rng = random.Random(99 + q)
    for _ in range(50):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        A = tuple(tuple(rng.randrange(q) for _ in range(cols)) for _ in range(rows))
        assert rank(F, A) + kernel_dim(F, A) == cols


def test_gl_iter_counts():
    assert sum(1 for _ in gl_iter(GF(3), 1)) == 2
    assert sum(1 for _ in gl_iter(GF(2), 2)) == 6
    assert sum(1 for _ in gl_iter(GF(3), 2)) == 48
    assert gl_order(2, 2) == 6 and gl_order(2, 3) == 48
    for A in gl_iter(GF(2), 2):
        assert is_invertible(GF(2), A)


def test_gl_iter_cap_refusal():
    with pytest.raises(RefusalError):
        list(gl_iter(GF(5), 4, cap=10))


def test_matrix_inverse_random():
    F = GF(5)
    rng = random.Random(7)
    n = 3
    found = 0
    while found < 20:
        A = tuple(tuple(rng.randrange(5) for _ in range(n)) for _ in range(n))
        if not is_invertible(F, A):
            continue
        found += 1
        assert mat_mul(F, A, mat_inv(F, A)) == identity(n)


def test_charpoly_matches_det():
    F = GF(7)
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randrange(1, 5)
        A = tuple(tuple(rng.randrange(7) for _ in range(n)) for _ in range(n))
        ch = charpoly(F, A)
        assert len(ch) == n + 1 and ch[-1] == 1
        # evaluating the characteristic polynomial at x gives det(xI - A)
        for x in range(7):
            B = tuple(
                tuple(F.sub(x if i == j else 0, A[i][j]) for j in range(n))
                for i in range(n)
            )
            val = 0
            for k, c in enumerate(reversed(ch)):
                val = F.add(F.mul(val, x), c)
            # Horner gives ch(x); compare against det directly
            assert peval_horner(F, ch, x) == det(F, B)


def peval_horner(F, f, x):
    out = 0
    for c in reversed(f):
        out = F.add(F.mul(out, x), c)
    return out


def test_charpoly_annihilates_companion():
    F = GF(3)
    f = (2, 1, 0, 1)  # monic cubic
    C = companion(F, f)
    assert charpoly(F, C) == f
    zero = poly_apply(F, f, C)
    assert all(v == 0 for row in zero for v in row)


def test_exterior_square_functorial():
    F = GF(5)
    rng = random.Random(13)
    for _ in range(20):
        A = tuple(tuple(rng.randrange(5) for _ in range(3)) for _ in range(3))
        B = tuple(tuple(rng.randrange(5) for _ in range(3)) for _ in range(3))
        left = exterior_square(F, mat_mul(F, A, B))
        right = mat_mul(F, exterior_square(F, A), exterior_square(F, B))
        assert left == right
