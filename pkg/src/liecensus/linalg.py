"""Dense exact linear algebra over finite fields.

Matrices are tuples of tuples (rows) of field-element ints, so they are
hashable and safe to share.  All routines take the field as first argument.
"""

from .caps import check_cap
from .fields import pnormal, padd, pmul, pneg

def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero_matrix(rows, cols):
    return tuple((0,) * cols for _ in range(rows))


def transpose(A):
    return tuple(zip(*A)) if A else ()


def mat_add(F, A, B):
    return tuple(tuple(F.add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(F, A, B):
    return tuple(tuple(F.sub(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(F, c, A):
    return tuple(tuple(F.mul(c, a) for a in row) for row in A)


def mat_mul(F, A, B):
    if not B:
        return tuple(() for _ in A)
    Bt = tuple(zip(*B))
    mul, add = F.mul, F.add
    out = []
    for row in A:
        orow = []
        for col in Bt:
            s = 0
            for a, b in zip(row, col):
                if a and b:
                    s = add(s, mul(a, b))
            orow.append(s)
        out.append(tuple(orow))
    return tuple(out)


def mat_vec(F, A, v):
    mul, add = F.mul, F.add
    out = []
    for row in A:
        s = 0
        for a, b in zip(row, v):
            if a and b:
                s = add(s, mul(a, b))
        out.append(s)
    return tuple(out)


def mat_pow(F, A, k):
    n = len(A)
    out = identity(n)
    base = A
    while k:
        if k & 1:
            out = mat_mul(F, out, base)
        base = mat_mul(F, base, base)
        k >>= 1
    return out


def rank(F, A):
    if not A or not A[0]:
        return 0
    rows = [list(r) for r in A]
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def kernel_dim(F, A):
    """Dimension of the right null space of A."""
    if not A or not A[0]:
        return len(A[0]) if A else 0
    return len(A[0]) - rank(F, A)


def rref(F, A):
    """Reduced row echelon form plus pivot column list."""
    rows = [list(r) for r in A]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows[:r]), pivots


def kernel_basis(F, A):
    R, pivots = rref(F, A)
    ncols = len(A[0]) if A else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(R[r][fc])
        basis.append(tuple(v))
    return basis


def det(F, A):
    rows = [list(r) for r in A]
    n = len(rows)
    sign = 1
    d = 1
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        d = F.mul(d, rows[c][c])
        inv = F.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                f = F.mul(inv, rows[i][c])
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[c])]
    if sign < 0:
        d = F.neg(d)
    return d


def mat_inv(F, A):
    n = len(A)
    rows = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(A)]
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, n):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            raise ZeroDivisionError("matrix not invertible")
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        r += 1
    return tuple(tuple(row[n:]) for row in rows)


def is_invertible(F, A):
    return len(A) == len(A[0]) and rank(F, A) == len(A)


def block_diag(blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = b[i][j]
        off += k
    return tuple(tuple(r) for r in out)


def companion(F, f):
    """Companion matrix of a monic polynomial f (degree >= 1)."""
    n = len(f) - 1
    assert n >= 1 and f[-1] == 1
    out = [[0] * n for _ in range(n)]
    for j in range(n - 1):
        out[j + 1][j] = 1
    for i in range(n):
        out[i][n - 1] = F.neg(f[i])
    return tuple(tuple(r) for r in out)


def poly_apply(F, f, A):
    """Evaluate a polynomial at a square matrix (Horner)."""
    n = len(A)
    out = zero_matrix(n, n)
    for c in reversed(f):
        out = mat_mul(F, out, A)
        if c:
            out = tuple(
                tuple(F.add(x, c) if i == j else x for j, x in enumerate(row))
                for i, row in enumerate(out)
            )
    return out


def charpoly(F, A):
    """Characteristic polynomial det(X*I - A), via minor expansion.

    Matrix entries become degree-<=1 polynomials; fine for the desk-scale
    dimensions used here (n <= 5).
    """
    n = len(A)
    entries = [
        [
            pnormal(((F.neg(A[i][j]), 1) if i == j else (F.neg(A[i][j]),)))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(F, entries)


def _poly_det(F, M):
    n = len(M)
    if n == 0:
        return (1,)
    if n == 1:
        return M[0][0]
    total = ()
    for j in range(n):
        entry = M[0][j]
        if not entry:
            continue
        minor = [[M[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = pmul(F, entry, _poly_det(F, minor))
        if j % 2:
            term = pneg(F, term)
        total = padd(F, total, term)
    return total


def exterior_square(F, A):
    """Matrix of the induced map on the exterior square, basis e_i ^ e_j (i<j)."""
    n = len(A)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for (a, b) in pairs:
        row = []
        for (c, d) in pairs:
            row.append(F.sub(F.mul(A[a][c], A[b][d]), F.mul(A[a][d], A[b][c])))
        out.append(tuple(row))
    return tuple(out)


def kron(F, A, B):
    """Kronecker product, row-major pair indexing."""
    if not A or not B:
        return ()
    out = []
    for ra in A:
        for rb in B:
            row = []
            for a in ra:
                for b in rb:
                    row.append(F.mul(a, b))
            out.append(tuple(row))
    return tuple(out)


def gl_order(n, q):
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def gl_iter(F, n, cap=None):
    """Yield every invertible n x n matrix over F exactly once.

    Rows are chosen by extending a linearly independent set, so the number of
    iterations is |GL_n(q)| (plus the rejected candidates at each level).
    """
    q = F.q
    check_cap("group_size", q ** (n * n), cap, what=f"GL_{n}({q}) enumeration")
    if n == 0:
        yield ()
        return

    def reduce_row(echelon, pivots, v):
        v = list(v)
        for row, pc in zip(echelon, pivots):
            if v[pc]:
                f = v[pc]
                v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, row)]
        return v

    all_vectors = []
    for idx in range(q**n):
        vec = []
        x = idx
        for _ in range(n):
            vec.append(x % q)
            x //= q
        all_vectors.append(tuple(vec))

    def rec(rows, echelon, pivots):
        if len(rows) == n:
            yield tuple(rows)
            return
        for v in all_vectors:
            red = reduce_row(echelon, pivots, v)
            pc = next((i for i, x in enumerate(red) if x), None)
            if pc is None:
                continue
            inv = F.inv(red[pc])
            norm = [F.mul(inv, x) for x in red]
            yield from rec(rows + [v], echelon + [norm], pivots + [pc])

    yield from rec([], [], [])
