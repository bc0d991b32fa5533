"""Ext groups of finite p-power-torsion modules and the extension-datum space.

Ext is computed two independent ways: from a free presentation (cokernel of
the induced map on Hom, evaluated summand by honest summand), and through
the dual-tensor description, which turns into the min-of-parts partition.
Acceptance requires the two to agree in type and size.

The parameter space for central extensions of V = F_p^m by B = M_lam with a
distinguished central flag member carries a pair (y, z): an alternating-map
component into B[p] and a homomorphism component into B/pB.  A pair
(g, h) acts by y -> h|_B[p] . y . wedge^2(gbar^-1) and z -> hbar . z . g^-1,
with (hbar, h|_B[p]) the induced pair of the module automorphism h.
"""

from itertools import product

from .caps import InternalInconsistencyError
from .dvr import zmod
from .fields import GF
from .linalg import exterior_square, kernel_dim, mat_inv, mat_mul
from .modules import module


def ext_by_resolution(kappa, lam, p):
    """Partition type of Ext(M_kappa, M_lam), from a free presentation.

    The presentation has one free generator per part of kappa, with the
    relation map acting diagonally by p^kappa_i, so Ext is the direct sum of
    the quotients B / p^kappa_i B; each summand is classified honestly from
    its element sets.
    """
    kappa, lam = tuple(kappa), tuple(lam)
    if not kappa or not lam:
        return ()
    ring = zmod(p, lam[0])
    B = module(ring, lam)
    parts = []
    for k in kappa:
        pk = ring.t_pow(k) if k < ring.K else 0
        if pk == 0 and k >= ring.K:
            sub = frozenset([0])
        else:
            sub = frozenset(B.scalar_mul(pk, x) for x in B.elements())
        parts.extend(B.quotient_type(sub))
    return tuple(sorted(parts, reverse=True))


def ext_by_dual_tensor(kappa, lam, p):
    """Partition type of Ext via the dual-tensor description: parts min(k_i, l_j)."""
    parts = sorted(
        (min(ki, lj) for ki in kappa for lj in lam), reverse=True
    )
    return tuple(parts)


def ext_order(kappa, lam, p):
    return p ** sum(min(ki, lj) for ki in kappa for lj in lam)


# ---------------------------------------------------------------------------
# the extension-datum space


class ExtSpace:
    """Coordinates for Hom(wedge^2(V/U), B[p]) + Hom(V, B/pB) over F_p.

    A datum is a pair of int tuples: y has s rows by c = C(d_l, 2) columns
    (row-major), z has s rows by m columns.
    """

    def __init__(self, m, dims, lam, p):
        dims = tuple(dims)
        assert sum(dims) == m and all(d > 0 for d in dims[:-1]) and dims[-1] >= 0
        self.m = m
        self.dims = dims
        self.lam = tuple(lam)
        self.p = p
        self.F = GF(p)
        self.s = len(self.lam)
        self.dl = dims[-1]
        self.c = self.dl * (self.dl - 1) // 2
        self.dim = self.s * self.c + self.m * self.s
        self.pairs = [
            (i, j) for i in range(self.dl) for j in range(i + 1, self.dl)
        ]

    def zero(self):
        return ((0,) * (self.s * self.c), (0,) * (self.s * self.m))

    def all_data(self):
        for y in product(range(self.p), repeat=self.s * self.c):
            for z in product(range(self.p), repeat=self.s * self.m):
                yield (y, z)

    def y_matrix(self, datum):
        y = datum[0]
        return tuple(
            tuple(y[r * self.c + c] for c in range(self.c)) for r in range(self.s)
        )

    def z_matrix(self, datum):
        z = datum[1]
        return tuple(
            tuple(z[r * self.m + c] for c in range(self.m)) for r in range(self.s)
        )

    def pack(self, ymat, zmat):
        y = tuple(v for row in ymat for v in row)
        z = tuple(v for row in zmat for v in row)
        return (y, z)

    def check_flag(self, g):
        """The acting matrix must stabilise the standard flag."""
        hi = 0
        for d in self.dims[:-1]:
            hi += d
            for r in range(hi, self.m):
                for c in range(hi - d, hi):
                    if c < hi and r >= hi and g[r][c] != 0:
                        raise ValueError("matrix does not preserve the flag")

    def gbar(self, g):
        lo = self.m - self.dl
        return tuple(tuple(row[lo:]) for row in g[lo:])

    def action(self, g, pair, datum, checked=False):
        """Apply (g, h) with h given by its induced pair (Y on B/pB, Z on B[p])."""
        if not checked:
            self.check_flag(g)
        F = self.F
        Y, Z = pair
        ginv = mat_inv(F, g)
        zmat = mat_mul(F, mat_mul(F, Y, self.z_matrix(datum)), ginv)
        if self.c:
            wbar_inv = exterior_square(F, mat_inv(F, self.gbar(g)))
            ymat = mat_mul(F, mat_mul(F, Z, self.y_matrix(datum)), wbar_inv)
        else:
            ymat = self.y_matrix(datum)
        return self.pack(ymat, zmat)

    def fix_exponent(self, g, pair, ginv=None, wbar_inv=None):
        """t with p^t points fixed by (g, h); the count is exact by linearity."""
        F = self.F
        Y, Z = pair
        t = 0
        if ginv is None:
            ginv = mat_inv(F, g)
        if self.m and self.s:
            t += _fixed_dim_two_sided(F, Y, ginv)
        if self.c and self.s:
            if wbar_inv is None:
                wbar_inv = exterior_square(F, mat_inv(F, self.gbar(g)))
            t += _fixed_dim_two_sided(F, Z, wbar_inv)
        return t


def _fixed_dim_two_sided(F, L, R):
    """dim of {X : L X R = X} inside the full matrix space."""
    a = len(L)
    b = len(R)
    rows = []
    for i in range(a):
        for j in range(b):
            row = []
            for k in range(a):
                for l in range(b):
                    v = F.mul(L[i][k], R[l][j])
                    if k == i and l == j:
                        v = F.sub(v, 1)
                    row.append(v)
            rows.append(tuple(row))
    return kernel_dim(F, tuple(rows))


def check_burnside_integral(total, group_order, what=""):
    q, r = divmod(total, group_order)
    if r:
        raise InternalInconsistencyError(
            f"Burnside sum not divisible by the group order in {what or 'orbit count'}"
        )
    return q
