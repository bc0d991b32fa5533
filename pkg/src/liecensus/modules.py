"""Finite modules over DVR quotients: Hall numbers and automorphisms.

``M_lam`` over a quotient ring with residue field F_q is the direct sum of
cyclic modules of lengths lam_1 >= lam_2 >= ...; its elements are encoded as
mixed-radix ints.  Submodule enumeration is exhaustive (reduced echelon
bases in the vector-space case, a join-closure lattice walk otherwise), and
a submodule or quotient is classified by its valuation profile: the sizes
|t^k N| for k = 0..K determine the partition type uniquely.

Hall numbers are read off one full submodule sweep per module; Hall and
chain polynomials are interpolated from counts at small prime powers and
validated on held-out points, which makes the interpolation degree bound a
safety net rather than a correctness assumption.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .caps import InternalInconsistencyError, check_cap
from .dvr import tser, ring_by_key
from .fields import prime_powers
from .linalg import gl_iter, gl_order, is_invertible

# ---------------------------------------------------------------------------
# partitions


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of n as weakly decreasing tuples, lex-descending."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, maxpart), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(n, n, [])
    return tuple(out)


def n_stat(lam):
    """The statistic sum_i (i-1) * lam_i, an upper degree bound for Hall counts."""
    return sum(i * part for i, part in enumerate(lam))


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= k) for k in range(1, lam[0] + 1))


def lam_groups(lam):
    """Distinct parts mu_1 > ... > mu_r with multiplicities u_1, ..., u_r."""
    mus, us = [], []
    for part in lam:
        if mus and mus[-1] == part:
            us[-1] += 1
        else:
            mus.append(part)
            us.append(1)
    return tuple(mus), tuple(us)


# ---------------------------------------------------------------------------
# the module itself


class FiniteModule:
    """M_lam over a DVR quotient; elements are ints in range(self.size)."""

    def __init__(self, ring, lam):
        lam = tuple(lam)
        assert all(a >= b for a, b in zip(lam, lam[1:])) and all(a > 0 for a in lam)
        if lam and ring.K < lam[0]:
            raise ValueError("ring cap smaller than the largest part")
        self.ring = ring
        self.lam = lam
        self.q = ring.q
        self.coord_sizes = tuple(self.q ** a for a in lam)
        self.size = 1
        for cs in self.coord_sizes:
            self.size *= cs
        self._coord_add = [_coord_add_table(ring, a) for a in lam]
        self._coord_neg = [_coord_neg_table(ring, a) for a in lam]
        self._coord_tmul = [_coord_scalar_table(ring, a, ring.t) for a in lam]
        self._scalar_tables = None
        self._tk_sets = None
        self._submodules = None
        self._hall = None

    # -- coordinates --------------------------------------------------------

    def coords(self, x):
        out = []
        for cs in self.coord_sizes:
            out.append(x % cs)
            x //= cs
        return tuple(out)

    def encode(self, coords):
        x = 0
        for c, cs in zip(reversed(coords), reversed(self.coord_sizes)):
            x = x * cs + c
        return x

    def generator(self, i):
        return self.encode(tuple(1 if j == i else 0 for j in range(len(self.lam))))

    # -- arithmetic ---------------------------------------------------------

    def add(self, x, y):
        out = 0
        mult = 1
        for cs, table in zip(self.coord_sizes, self._coord_add):
            out += table[x % cs][y % cs] * mult
            x //= cs
            y //= cs
            mult *= cs
        return out

    def neg(self, x):
        out = 0
        mult = 1
        for cs, table in zip(self.coord_sizes, self._coord_neg):
            out += table[x % cs] * mult
            x //= cs
            mult *= cs
        return out

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def t_mul(self, x):
        out = 0
        mult = 1
        for cs, table in zip(self.coord_sizes, self._coord_tmul):
            out += table[x % cs] * mult
            x //= cs
            mult *= cs
        return out

    def _scalar_table(self, r):
        if self._scalar_tables is None:
            self._scalar_tables = {}
        tabs = self._scalar_tables.get(r)
        if tabs is None:
            tabs = [_coord_scalar_table(self.ring, a, r) for a in self.lam]
            self._scalar_tables[r] = tabs
        return tabs

    def scalar_mul(self, r, x):
        tabs = self._scalar_table(r)
        out = 0
        mult = 1
        for cs, table in zip(self.coord_sizes, tabs):
            out += table[x % cs] * mult
            x //= cs
            mult *= cs
        return out

    def int_scalar(self, k, x):
        """Multiplication by an ordinary integer."""
        out = 0
        k = k % (self.q ** self.lam[0]) if self.lam else 0
        base = x
        while k:
            if k & 1:
                out = self.add(out, base)
            base = self.add(base, base)
            k >>= 1
        return out

    def elements(self):
        return range(self.size)

    def cyclic(self, x):
        """The cyclic submodule Rx as a frozenset of element indices."""
        return frozenset(self.scalar_mul(r, x) for r in self.ring.elements())

    # -- structural subsets --------------------------------------------------

    def t_power_set(self, k):
        """t^k M as a frozenset."""
        if self._tk_sets is None:
            self._tk_sets = {}
        got = self._tk_sets.get(k)
        if got is None:
            if k == 0:
                got = frozenset(self.elements())
            else:
                prev = self.t_power_set(k - 1)
                got = frozenset(self.t_mul(x) for x in prev)
            self._tk_sets[k] = got
        return got

    def torsion_set(self, k):
        """M[t^k] = elements killed by t^k."""
        if k == 0:
            return frozenset([0])
        tk = self.ring.t_pow(k)
        coord_opts = []
        for a, cs in zip(self.lam, self.coord_sizes):
            if k >= a:
                coord_opts.append(range(cs))
            else:
                coord_opts.append(
                    [c for c in range(cs) if _coord_reduce(self.ring, self.ring.mul(tk, c), a) == 0]
                )
        return frozenset(self.encode(combo) for combo in product(*coord_opts))

    # -- classification ------------------------------------------------------

    def _log_q(self, n):
        e = 0
        while n > 1:
            assert n % self.q == 0, "subset size is not a power of q"
            n //= self.q
            e += 1
        return e

    def subset_type(self, N):
        """Partition type of a submodule given as a set of element indices."""
        sizes = [self._log_q(len(N))]
        cur = N
        while sizes[-1] > 0:
            cur = frozenset(self.t_mul(x) for x in cur)
            sizes.append(self._log_q(len(cur)))
        counts = [sizes[k] - sizes[k + 1] for k in range(len(sizes) - 1)]
        return conjugate_from_counts(counts)

    def quotient_type(self, N):
        """Partition type of M/N for a submodule N."""
        sizes = []
        k = 0
        while True:
            tk = self.t_power_set(k)
            inter = len(tk & N)
            assert len(tk) % inter == 0
            sizes.append(self._log_q(len(tk) // inter))
            if sizes[-1] == 0:
                break
            k += 1
        counts = [sizes[k] - sizes[k + 1] for k in range(len(sizes) - 1)]
        return conjugate_from_counts(counts)

    # -- submodule enumeration -----------------------------------------------

    def submodules(self, cap=None):
        """Every submodule, as a list of frozensets of element indices."""
        if self._submodules is None:
            check_cap("module_size", self.size, cap, what=f"submodule sweep of {self}")
            if all(a == 1 for a in self.lam):
                self._submodules = self._subspaces()
            else:
                self._submodules = self._submodules_bfs()
        return self._submodules

    def _subspaces(self):
        """All F_q-subspaces via reduced echelon bases."""
        n = len(self.lam)
        out = [frozenset([0])]
        for k in range(1, n + 1):
            for pivots in combinations(range(n), k):
                free_positions = []
                for r, pc in enumerate(pivots):
                    for c in range(pc + 1, n):
                        if c not in pivots:
                            free_positions.append((r, c))
                for fill in product(range(self.q), repeat=len(free_positions)):
                    rows = [[0] * n for _ in range(k)]
                    for r, pc in enumerate(pivots):
                        rows[r][pc] = 1
                    for (r, c), v in zip(free_positions, fill):
                        rows[r][c] = v
                    basis = [self.encode(tuple(row)) for row in rows]
                    span = {0}
                    for b in basis:
                        multiples = [self.scalar_mul(c, b) for c in range(self.q)]
                        span = {self.add(x, m) for x in span for m in multiples}
                    out.append(frozenset(span))
        return out

    def _submodules_bfs(self):
        cyclics = {}
        for x in self.elements():
            c = self.cyclic(x)
            if c not in cyclics:
                cyclics[c] = x
        cyc_items = sorted(cyclics.items(), key=lambda kv: (len(kv[0]), kv[1]))
        zero = frozenset([0])
        found = {zero}
        frontier = [zero]
        while frontier:
            new = []
            for N in frontier:
                for cyc, gen in cyc_items:
                    if gen in N:
                        continue
                    joined = self._join(N, cyc)
                    if joined not in found:
                        found.add(joined)
                        new.append(joined)
            frontier = new
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def _join(self, N, cyc):
        result = set(N)
        add = self.add
        for y in cyc:
            if y not in result:
                result.update(add(n, y) for n in N)
        return frozenset(result)

    def __repr__(self):
        return f"M_{list(self.lam)} over {self.ring}"


def conjugate_from_counts(counts):
    """Partition whose conjugate is the given weakly decreasing count list."""
    conj = tuple(c for c in counts if c > 0)
    return conjugate(conj)


def _coord_reduce(ring, value, cap):
    return ring.reduce_mod_t(value, cap)


@lru_cache(maxsize=None)
def _coord_add_table(ring, cap):
    cs = ring.q**cap
    return [
        [_coord_reduce(ring, ring.add(a, b), cap) for b in range(cs)] for a in range(cs)
    ]


@lru_cache(maxsize=None)
def _coord_neg_table(ring, cap):
    cs = ring.q**cap
    return [_coord_reduce(ring, ring.neg(a), cap) for a in range(cs)]


@lru_cache(maxsize=None)
def _coord_scalar_table(ring, cap, r):
    cs = ring.q**cap
    return [_coord_reduce(ring, ring.mul(r, a), cap) for a in range(cs)]


@lru_cache(maxsize=None)
def module(ring, lam):
    return FiniteModule(ring, tuple(lam))


# ---------------------------------------------------------------------------
# Hall numbers and chain counts


@lru_cache(maxsize=None)
def hall_table(ring_key, lam, cap=None):
    """Counter {(mu, nu): #submodules N of M_lam with N ~ mu, M/N ~ nu}."""
    ring = ring_by_key(ring_key)
    M = module(ring, lam)
    table = Counter()
    for N in M.submodules(cap):
        table[(M.subset_type(N), M.quotient_type(N))] += 1
    return table


def hall_number(lam, mu, nu, ring, cap=None):
    """Number of submodules of M_lam isomorphic to M_mu with quotient M_nu."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(mu) + sum(nu) != sum(lam):
        return 0
    return hall_table(ring.key(), lam, cap)[(mu, nu)]


_CHAIN_MEMO = {}


def chain_count(lam, mus, ring, cap=None):
    """Number of chains 0 = N_0 <= ... <= N_r = M_lam with N_i/N_{i-1} ~ mus[i]."""
    lam = tuple(lam)
    mus = tuple(tuple(m) for m in mus)
    if sum(sum(m) for m in mus) != sum(lam):
        return 0
    key = (ring.key(), lam, mus)
    got = _CHAIN_MEMO.get(key)
    if got is not None:
        return got
    if len(mus) == 0:
        out = 1 if not lam else 0
    elif len(mus) == 1:
        out = 1 if mus[0] == lam else 0
    else:
        out = 0
        first = mus[0]
        rest = mus[1:]
        table = hall_table(ring.key(), lam, cap)
        for (mu, nu), cnt in table.items():
            if mu == first and cnt:
                out += cnt * chain_count(nu, rest, ring, cap)
    _CHAIN_MEMO[key] = out
    return out


# ---------------------------------------------------------------------------
# exact interpolation with held-out validation


def _lagrange_fit(points):
    """Exact interpolating polynomial through (x, y) points, as Fractions."""
    coeffs = [Fraction(0)]
    for i, (xi, yi) in enumerate(points):
        # basis polynomial for node i
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            # multiply basis by (x - xj)
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xj
                new[k + 1] += c
            basis = new
            denom *= xi - xj
        scale = Fraction(yi) / denom
        while len(coeffs) < len(basis):
            coeffs.append(Fraction(0))
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_eval(coeffs, x):
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def poly_eval_int(coeffs, x):
    v = poly_eval(coeffs, x)
    if v.denominator != 1:
        raise InternalInconsistencyError(f"non-integral polynomial value at {x}")
    return v.numerator


def interpolate_validated(sample, bound, held_out=2, what=""):
    """Fit on bound+1 prime powers and check held-out ones exactly.

    `sample` maps a prime power to an integer count.  A mismatch on a
    held-out point is a hard failure: the degree bound is a theorem here,
    so disagreement means an enumeration bug, not bad data.
    """
    pts = prime_powers(bound + 1 + held_out)
    values = [(x, sample(x)) for x in pts]
    coeffs = _lagrange_fit(values[: bound + 1])
    for x, y in values[bound + 1 :]:
        if poly_eval(coeffs, x) != y:
            raise InternalInconsistencyError(
                f"{what or 'interpolation'}: held-out point q={x} gives {y}, "
                f"fit predicts {poly_eval(coeffs, x)}"
            )
    return coeffs


@lru_cache(maxsize=None)
def hall_polynomial(lam, mu, nu, cap=None):
    """The Hall count as an exact polynomial in the residue field size q."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(mu) + sum(nu) != sum(lam):
        return (Fraction(0),)
    bound = n_stat(lam) + 2
    K = lam[0] if lam else 1

    def sample(qq):
        return hall_number(lam, mu, nu, tser(qq, K), cap)

    return interpolate_validated(sample, bound, what=f"hall({lam},{mu},{nu})")


@lru_cache(maxsize=None)
def chain_polynomial(lam, mus, cap=None):
    """Chain count as an exact polynomial in the residue field size q."""
    lam = tuple(lam)
    mus = tuple(tuple(m) for m in mus)
    if sum(sum(m) for m in mus) != sum(lam):
        return (Fraction(0),)
    bound = n_stat(lam) + 2
    K = lam[0] if lam else 1

    def sample(qq):
        return chain_count(lam, mus, tser(qq, K), cap)

    return interpolate_validated(sample, bound, what=f"chain({lam};{mus})")


def chain_value(lam, mus, qq, cap=None):
    return poly_eval_int(chain_polynomial(tuple(lam), tuple(tuple(m) for m in mus), cap), qq)


# ---------------------------------------------------------------------------
# module automorphisms via the block-divisibility matrix pattern


class _AutContext:
    """Shared structure for automorphisms of M_lam over one ring."""

    def __init__(self, ring, lam):
        self.ring = ring
        self.lam = tuple(lam)
        self.mus, self.us = lam_groups(self.lam)
        self.s = len(self.lam)
        self.block_of = []
        for i, u in enumerate(self.us):
            self.block_of.extend([i] * u)
        self.mu_of = tuple(self.mus[b] for b in self.block_of)
        # canonical parameter cap and the t-power carried by each entry
        self.cap = tuple(
            tuple(min(self.mu_of[r], self.mu_of[c]) for c in range(self.s))
            for r in range(self.s)
        )
        self.shift = tuple(
            tuple(max(self.mu_of[r] - self.mu_of[c], 0) for c in range(self.s))
            for r in range(self.s)
        )
        self._module = None

    def module(self):
        if self._module is None:
            self._module = module(self.ring, self.lam)
        return self._module

    def key(self):
        return (self.ring.key(), self.lam)


@lru_cache(maxsize=None)
def _aut_context(ring_key, lam):
    return _AutContext(ring_by_key(ring_key), lam)


class ModuleAut:
    """An automorphism of M_lam, stored as its canonical parameter matrix.

    Entry (r, c) of the acting matrix equals t^shift * param with the
    parameter reduced mod t^min(mu_r, mu_c); this makes the representation
    unique, so streams enumerate each automorphism exactly once.
    """

    __slots__ = ("ctx", "params", "_actual")

    def __init__(self, ctx, params):
        self.ctx = ctx
        self.params = params
        self._actual = None

    def actual(self):
        if self._actual is None:
            ring = self.ctx.ring
            rows = []
            for r in range(self.ctx.s):
                row = []
                for c in range(self.ctx.s):
                    sh = self.ctx.shift[r][c]
                    v = self.params[r][c]
                    row.append(ring.mul(ring.t_pow(sh), v) if sh else v)
                rows.append(tuple(row))
            self._actual = tuple(rows)
        return self._actual

    def apply(self, x):
        M = self.ctx.module()
        ring = self.ctx.ring
        coords = M.coords(x)
        act = self.actual()
        out = []
        for r in range(self.ctx.s):
            acc = 0
            for c in range(self.ctx.s):
                e = act[r][c]
                if e and coords[c]:
                    acc = ring.add(acc, ring.mul(e, coords[c]))
            out.append(ring.reduce_mod_t(acc, self.ctx.lam[r]))
        return M.encode(tuple(out))

    def compose(self, other):
        """self after other."""
        ring = self.ctx.ring
        A, B = self.actual(), other.actual()
        s = self.ctx.s
        params = []
        for r in range(s):
            row = []
            for c in range(s):
                acc = 0
                for k in range(s):
                    if A[r][k] and B[k][c]:
                        acc = ring.add(acc, ring.mul(A[r][k], B[k][c]))
                sh = self.ctx.shift[r][c]
                if sh:
                    if ring.val(acc) < sh:
                        raise InternalInconsistencyError("composition broke divisibility")
                    acc = ring.t_quotient(acc, sh)
                row.append(ring.reduce_mod_t(acc, self.ctx.cap[r][c]))
            params.append(tuple(row))
        return ModuleAut(self.ctx, tuple(params))

    def inverse(self):
        ring = self.ctx.ring
        s = self.ctx.s
        rows = [list(r) + [1 if i == j else 0 for j in range(s)] for i, r in enumerate(self.actual())]
        for c in range(s):
            piv = next(i for i in range(c, s) if ring.is_unit(rows[i][c]))
            rows[c], rows[piv] = rows[piv], rows[c]
            inv = ring.inv(rows[c][c])
            rows[c] = [ring.mul(inv, x) for x in rows[c]]
            for i in range(s):
                if i != c and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(rows[i], rows[c])]
        params = []
        for r in range(s):
            row = []
            for c in range(s):
                v = rows[r][s + c]
                sh = self.ctx.shift[r][c]
                if sh:
                    if ring.val(v) < sh:
                        raise InternalInconsistencyError("inverse broke divisibility")
                    v = ring.t_quotient(v, sh)
                row.append(ring.reduce_mod_t(v, self.ctx.cap[r][c]))
            params.append(tuple(row))
        return ModuleAut(self.ctx, tuple(params))

    def induced_pair(self):
        """Matrices (Y, Z) of the induced maps on M/tM and M[t]."""
        ring = self.ctx.ring
        s = self.ctx.s
        Y = []
        Z = []
        for r in range(s):
            yrow, zrow = [], []
            br = self.ctx.block_of[r]
            for c in range(s):
                bc = self.ctx.block_of[c]
                p = ring.residue(self.params[r][c])
                yrow.append(p if br >= bc else 0)
                zrow.append(p if br <= bc else 0)
            Y.append(tuple(yrow))
            Z.append(tuple(zrow))
        return tuple(Y), tuple(Z)

    def __eq__(self, other):
        return isinstance(other, ModuleAut) and self.params == other.params and self.ctx is other.ctx

    def __hash__(self):
        return hash(self.params)


def identity_aut(lam, ring):
    ctx = _aut_context(ring.key(), tuple(lam))
    params = tuple(
        tuple(1 if r == c else 0 for c in range(ctx.s)) for r in range(ctx.s)
    )
    return ModuleAut(ctx, params)


def aut_order_value(lam, q):
    """|Aut(M_lam)| over residue field size q, from the block pattern."""
    mus, us = lam_groups(tuple(lam))
    out = 1
    for i, (mu, u) in enumerate(zip(mus, us)):
        out *= gl_order(u, q) * q ** ((mu - 1) * u * u)
        for j in range(i + 1, len(mus)):
            out *= q ** (2 * mus[j] * u * us[j])
    return out


def induced_image_order(lam, q):
    """Size of the induced-pair image inside GL_s x GL_s."""
    mus, us = lam_groups(tuple(lam))
    out = 1
    cross = 0
    for i, u in enumerate(us):
        out *= gl_order(u, q)
        for j in range(i + 1, len(us)):
            cross += u * us[j]
    return out * q ** (2 * cross)


def induced_kernel_order(lam, q):
    mus, us = lam_groups(tuple(lam))
    out = 1
    for i, (mu, u) in enumerate(zip(mus, us)):
        out *= q ** ((mu - 1) * u * u)
        for j in range(len(us)):
            if j != i:
                out *= q ** ((min(mu, mus[j]) - 1) * u * us[j])
    return out


def automorphisms(lam, ring, cap=None):
    """Stream of all automorphisms of M_lam, each exactly once."""
    lam = tuple(lam)
    ctx = _aut_context(ring.key(), lam)
    estimate = aut_order_value(lam, ring.q)
    check_cap("group_size", estimate, cap, what=f"Aut(M_{list(lam)}) enumeration")
    if not lam:
        yield ModuleAut(ctx, ())
        return
    F = ring.field
    s = ctx.s
    # positions grouped: diagonal blocks enumerated as invertible residue part
    # plus arbitrary higher-order lifts; cross-block entries are free params.
    blocks = list(range(len(ctx.us)))
    starts = []
    off = 0
    for u in ctx.us:
        starts.append(off)
        off += u

    cross_positions = [
        (r, c)
        for r in range(s)
        for c in range(s)
        if ctx.block_of[r] != ctx.block_of[c]
    ]
    cross_ranges = [range(ring.q ** ctx.cap[r][c]) for (r, c) in cross_positions]

    def diag_choices(bi):
        u = ctx.us[bi]
        mu = ctx.mus[bi]
        lift_count = ring.q ** (mu - 1)
        for R0 in gl_iter(F, u, cap=None):
            base = [[R0[a][b] for b in range(u)] for a in range(u)]
            for lifts in product(range(lift_count), repeat=u * u):
                blk = [
                    [base[a][b] + ring.q * lifts[a * u + b] for b in range(u)]
                    for a in range(u)
                ]
                yield blk

    for diag in product(*(diag_choices(bi) for bi in blocks)):
        rows = [[0] * s for _ in range(s)]
        for bi, blk in enumerate(diag):
            st = starts[bi]
            u = ctx.us[bi]
            for a in range(u):
                for b in range(u):
                    rows[st + a][st + b] = blk[a][b]
        if not cross_positions:
            yield ModuleAut(ctx, tuple(tuple(r) for r in rows))
            continue
        for values in product(*cross_ranges):
            for (r, c), v in zip(cross_positions, values):
                rows[r][c] = v
            yield ModuleAut(ctx, tuple(tuple(row) for row in rows))


def aut_order(lam, ring, cap=None):
    """|Aut(M_lam)| by exhaustive stream counting."""
    return sum(1 for _ in automorphisms(lam, ring, cap))


@lru_cache(maxsize=None)
def aut_polynomial(lam, cap=None):
    """|Aut(M_lam)| as an exact polynomial in q, held-out validated."""
    lam = tuple(lam)
    bound = sum(lam) ** 2

    def sample(qq):
        return aut_order_value(lam, qq)

    return interpolate_validated(sample, bound, what=f"aut({lam})")


def aut_generators(lam, ring):
    """A generating set of Aut(M_lam): elementary entries plus unit scalings."""
    lam = tuple(lam)
    ctx = _aut_context(ring.key(), lam)
    s = ctx.s
    ident = identity_aut(lam, ring).params
    gens = []

    def with_entry(r, c, value):
        rows = [list(row) for row in ident]
        rows[r][c] = value
        return ModuleAut(ctx, tuple(tuple(row) for row in rows))

    for r in range(s):
        for c in range(s):
            if r == c:
                continue
            for k in range(ctx.cap[r][c]):
                gens.append(with_entry(r, c, ring.t_pow(k)))
    prim = ring.field.primitive_element()
    for r in range(s):
        if ring.q > 2:
            gens.append(with_entry(r, r, prim))
        for k in range(1, ctx.mu_of[r]):
            rows = [list(row) for row in ident]
            rows[r][r] = ring.reduce_mod_t(ring.add(1, ring.t_pow(k)), ctx.cap[r][r])
            gens.append(ModuleAut(ctx, tuple(tuple(row) for row in rows)))
    return gens


# ---------------------------------------------------------------------------
# the induced-pair criterion


def pair_in_image(u, Y, Z, F):
    """Whether (Y, Z) arises from a module automorphism.

    `u` is the multiplicity vector of the distinct parts of the partition.
    The criterion: Y block-lower-triangular, Z block-upper-triangular, equal
    diagonal blocks, both invertible.
    """
    u = tuple(u)
    s = sum(u)
    if len(Y) != s or len(Z) != s:
        raise ValueError("pair has wrong dimensions for the block structure")
    block_of = []
    for i, ui in enumerate(u):
        block_of.extend([i] * ui)
    for r in range(s):
        for c in range(s):
            if block_of[r] < block_of[c] and Y[r][c] != 0:
                return False
            if block_of[r] > block_of[c] and Z[r][c] != 0:
                return False
            if block_of[r] == block_of[c] and Y[r][c] != Z[r][c]:
                return False
    return is_invertible(F, Y) and is_invertible(F, Z)


def induced_pairs(u, F):
    """Every pair admitted by the criterion, for block multiplicities u."""
    s = sum(u)
    block_of = []
    for i, ui in enumerate(u):
        block_of.extend([i] * ui)
    starts = []
    off = 0
    for ui in u:
        starts.append(off)
        off += ui
    lower = [(r, c) for r in range(s) for c in range(s) if block_of[r] > block_of[c]]
    upper = [(r, c) for r in range(s) for c in range(s) if block_of[r] < block_of[c]]
    for diag in product(*(gl_iter(F, ui) for ui in u)):
        base = [[0] * s for _ in range(s)]
        for bi, blk in enumerate(diag):
            st = starts[bi]
            for a in range(len(blk)):
                for b in range(len(blk)):
                    base[st + a][st + b] = blk[a][b]
        for lowvals in product(F.elements(), repeat=len(lower)):
            Y = [row[:] for row in base]
            for (r, c), v in zip(lower, lowvals):
                Y[r][c] = v
            Yt = tuple(tuple(r) for r in Y)
            for upvals in product(F.elements(), repeat=len(upper)):
                Z = [row[:] for row in base]
                for (r, c), v in zip(upper, upvals):
                    Z[r][c] = v
                yield Yt, tuple(tuple(r) for r in Z)


def pair_section(lam, ring, Y, Z):
    """Construct an automorphism mapping to the admissible pair (Y, Z)."""
    lam = tuple(lam)
    ctx = _aut_context(ring.key(), lam)
    s = ctx.s
    params = []
    for r in range(s):
        row = []
        for c in range(s):
            br, bc = ctx.block_of[r], ctx.block_of[c]
            if br < bc:
                row.append(Z[r][c])
            else:
                row.append(Y[r][c])
        params.append(tuple(row))
    h = ModuleAut(ctx, tuple(params))
    if h.induced_pair() != (tuple(tuple(r) for r in Y), tuple(tuple(r) for r in Z)):
        raise InternalInconsistencyError("section does not reproduce the pair")
    return h
