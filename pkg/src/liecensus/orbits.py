"""Orbit counts of the extension-datum space, by two independent engines.

The naive engine iterates the full acting group (flag stabilizer times
module automorphisms, the latter collapsed along the fibers of the
reduction to its induced pairs) and averages fixed-point counts.

The typed engine never touches group elements: it enumerates realised
conjugacy-class data of the relevant product of general linear groups,
weights every class by uniform-family intersection counts, and multiplies
by the fixed-space size of the class, which it reads off module-hom
dimensions.  Where both engines run they must agree exactly; that equality
is the package's central cross-check.
"""

from collections import Counter
from functools import lru_cache
from itertools import combinations, product

from .caps import RefusalError, check_cap
from .dvr import zmod
from .extension import ExtSpace, check_burnside_integral
from .fields import GF, irreducibles, ppow
from .gltypes import (
    flag_stab_intersection,
    induced_pair_class_intersection,
    parabolic_order,
    pretype_aut_order,
    type_key,
)
from .linalg import (
    block_diag,
    companion,
    exterior_square,
    gl_iter,
    kernel_dim,
    mat_inv,
    mat_mul,
    poly_apply,
)
from .modules import (
    aut_generators,
    aut_order_value,
    automorphisms,
    conjugate_from_counts,
    induced_image_order,
    lam_groups,
    partitions,
)


def space_shape(m, dims, lam):
    s = len(lam)
    dl = dims[-1]
    c = dl * (dl - 1) // 2
    return s, dl, c, s * c + m * s


def validate_dims(m, dims):
    dims = tuple(dims)
    if sum(dims) != m or any(d <= 0 for d in dims[:-1]) or dims[-1] < 0:
        raise ValueError(f"invalid flag shape {dims} for m={m}")
    return dims


# ---------------------------------------------------------------------------
# realised-class enumeration helpers


def invertible_irreducibles(F, d):
    polys = irreducibles(F, d)
    if d == 1:
        return [f for f in polys if f[0] != 0]
    return polys


def _realise(columns, F):
    """Assign distinct irreducible polynomials to a multiset of columns.

    `columns` is a sorted tuple of (degree, payload); yields one tuple of
    (poly, payload) per realised conjugacy class, each class exactly once.
    """
    groups = []
    for col in columns:
        if groups and groups[-1][0] == col:
            groups[-1][1] += 1
        else:
            groups.append([col, 1])
    degrees = sorted({col[0] for col in columns})
    pools = {d: invertible_irreducibles(F, d) for d in degrees}

    def rec(i, used):
        if i == len(groups):
            yield ()
            return
        (d, payload), mult = groups[i][0], groups[i][1]
        avail = [f for f in pools[d] if f not in used]
        for combo in combinations(avail, mult):
            for rest in rec(i + 1, used | set(combo)):
                yield tuple((f, payload) for f in combo) + rest

    yield from rec(0, frozenset())


# ---------------------------------------------------------------------------
# the flag side: classes of (g, induced map on the last quotient)


def _flag_shapes(m, dl):
    """Column multisets (d, kappa != (), nu): sum d|kappa| = m, sum d|nu| = dl."""
    out = []

    def rec(rm, rdl, minimum, acc):
        if rm == 0:
            if rdl == 0:
                out.append(tuple(acc))
            return
        for d in range(1, rm + 1):
            for ksize in range(1, rm // d + 1):
                for kappa in partitions(ksize):
                    for vsize in range(rdl // d + 1):
                        for nu in partitions(vsize):
                            col = (d, kappa, nu)
                            if col < minimum:
                                continue
                            rec(rm - d * ksize, rdl - d * vsize, col, acc + [col])

    rec(m, dl, (0, (), ()), [])
    return out


def _chain_extensions(shape, dims):
    """Fill intermediate chain steps for every column, respecting step budgets."""
    l = len(dims)
    cols = list(shape)

    def options(col):
        d, kappa, nu = col
        missing = sum(kappa) - sum(nu)
        if missing < 0:
            return []
        opts = []

        def rec(i, remaining, chosen):
            if i == l - 1:
                if remaining == 0:
                    opts.append(tuple(chosen))
                return
            for take in range(remaining + 1):
                for part in partitions(take):
                    rec(i + 1, remaining - take, chosen + [part])

        rec(0, missing, [])
        return opts

    per_col = [options(c) for c in cols]

    def rec2(j, acc, used):
        if j == len(cols):
            if all(used[i] == dims[i] for i in range(l - 1)):
                yield tuple(acc)
            return
        d, kappa, nu = cols[j]
        for steps in per_col[j]:
            newused = [used[i] + d * sum(steps[i]) for i in range(l - 1)]
            if any(newused[i] > dims[i] for i in range(l - 1)):
                continue
            yield from rec2(j + 1, acc + [(d, (kappa,) + steps + (nu,))], newused)

    yield from rec2(0, [], [0] * (l - 1))


@lru_cache(maxsize=None)
def _flag_weight(shape, dims, p):
    """|C ∩ im alpha| for a class of the given type over (m, d_l).

    The sum runs over extension *types*, so instance-level fills that give
    the same column multiset are deduplicated first.
    """
    base_cols = type_key([(d, (kappa, nu)) for d, kappa, nu in shape])
    aut_base = pretype_aut_order(base_cols)
    ext_keys = {type_key(ext) for ext in _chain_extensions(shape, dims)}
    total = 0
    for ext_key in sorted(ext_keys):
        aut_ext = pretype_aut_order(ext_key)
        assert aut_base % aut_ext == 0
        val = flag_stab_intersection(ext_key, dims, p)
        total += (aut_base // aut_ext) * val
    return total


def _flag_classes(m, dims, p):
    """Realised class data with weights; also checks the total against |P|."""
    F = GF(p)
    dl = dims[-1]
    out = []
    total = 0
    for shape in _flag_shapes(m, dl):
        w = _flag_weight(shape, dims, p)
        if w == 0:
            continue
        payload_cols = tuple((d, (kappa, nu)) for d, kappa, nu in shape)
        for assignment in _realise(payload_cols, F):
            fdict = {}
            nulist = []
            for f, (kappa, nu) in assignment:
                fdict[f] = kappa
                if nu:
                    nulist.append((f, nu))
            out.append((fdict, tuple(nulist), w))
            total += w
    if total != parabolic_order(dims, p):
        raise AssertionError("flag-side weights do not sum to the parabolic order")
    return out


# ---------------------------------------------------------------------------
# the automorphism side: classes of induced pairs


def _ss_shapes(s):
    """Column multisets (d, lamY, lamZ) with |lamY| = |lamZ| >= 1, sum = s."""
    out = []

    def rec(rs, minimum, acc):
        if rs == 0:
            out.append(tuple(acc))
            return
        for d in range(1, rs + 1):
            for w in range(1, rs // d + 1):
                for lamY in partitions(w):
                    for lamZ in partitions(w):
                        col = (d, lamY, lamZ)
                        if col < minimum:
                            continue
                        rec(rs - d * w, col, acc + [col])

    rec(s, (0, (), ()), [])
    return out


def _aut_classes(lam, p):
    lam = tuple(lam)
    s = len(lam)
    _, us = lam_groups(lam)
    F = GF(p)
    out = []
    total = 0
    for shape in _ss_shapes(s):
        key = type_key([(d, (lamY, lamZ)) for d, lamY, lamZ in shape])
        w = induced_pair_class_intersection(us, key, p)
        if w == 0:
            continue
        payload_cols = tuple((d, (lamY, lamZ)) for d, lamY, lamZ in shape)
        for assignment in _realise(payload_cols, F):
            ylist = tuple((f, parts[0]) for f, parts in assignment)
            zlist = tuple((f, parts[1]) for f, parts in assignment)
            out.append((ylist, zlist, w))
            total += w
    if total != induced_image_order(lam, p):
        raise AssertionError("aut-side weights do not sum to the image order")
    return out


# ---------------------------------------------------------------------------
# fixed-space dimensions from module data


@lru_cache(maxsize=None)
def _min_sum(part1, part2):
    return sum(min(a, b) for a in part1 for b in part2)


def _hom_dim(fdict, flist):
    """dim Hom over F_p[X] between modules sharing polynomial data."""
    t = 0
    for f, part in flist:
        kappa = fdict.get(f)
        if kappa:
            t += (len(f) - 1) * _min_sum(kappa, part)
    return t


class _WedgeData:
    """Lazy polynomial->partition data for the exterior square of gbar."""

    def __init__(self, F, nulist):
        self.F = F
        blocks = []
        for f, nu in sorted(nulist):
            for part in nu:
                blocks.append(companion(F, ppow(F, f, part)))
        gbar = block_diag(blocks)
        self.W = exterior_square(F, gbar)
        self.parts = {}

    def part(self, f):
        got = self.parts.get(f)
        if got is None:
            got = _part_in_matrix(self.F, self.W, f)
            self.parts[f] = got
        return got


def _part_in_matrix(F, A, f):
    """Partition of the f-primary part of the module of A."""
    B = poly_apply(F, f, A)
    d = len(f) - 1
    counts = []
    prev = 0
    Bk = B
    kd = kernel_dim(F, Bk)
    while kd - prev > 0:
        assert (kd - prev) % d == 0
        counts.append((kd - prev) // d)
        prev = kd
        Bk = mat_mul(F, Bk, B)
        kd = kernel_dim(F, Bk)
    return conjugate_from_counts(counts)


# ---------------------------------------------------------------------------
# the engines


def orbit_count_typed(m, dims, lam, p, cap=None):
    """Orbit count by class enumeration and uniform-family weights."""
    dims = validate_dims(m, dims)
    lam = tuple(lam)
    if m > 4 or sum(lam) > 4:
        raise RefusalError(
            f"typed engine is desk-scale only (m <= 4, |lam| <= 4); got m={m}, lam={lam}"
        )
    s, dl, c, D = space_shape(m, dims, lam)
    if D == 0:
        return 1
    F = GF(p)
    flag_classes = _flag_classes(m, dims, p)
    aut_classes = _aut_classes(lam, p)
    ppow = [p**t for t in range(D + 1)]
    total = 0
    use_wedge = c > 0
    for fdict, nulist, wf in flag_classes:
        wedge = _WedgeData(F, nulist) if use_wedge else None
        for ylist, zlist, wa in aut_classes:
            t = _hom_dim(fdict, ylist)
            if use_wedge:
                for f, part in zlist:
                    wpart = wedge.part(f)
                    if wpart:
                        t += (len(f) - 1) * _min_sum(wpart, part)
            total += wf * wa * ppow[t]
    denom = parabolic_order(dims, p) * induced_image_order(lam, p)
    return check_burnside_integral(total, denom, what="typed engine")


def parabolic_iter(F, dims, cap=None):
    """Every invertible block-upper-triangular matrix for the given blocks."""
    dims = tuple(dims)
    m = sum(dims)
    order = parabolic_order(dims, F.q)
    check_cap("group_size", order, cap, what="parabolic enumeration")
    starts = []
    off = 0
    for d in dims:
        starts.append(off)
        off += d
    upper_positions = []
    hi = 0
    for d in dims:
        lo = hi
        hi += d
        for r in range(lo, hi):
            for cc in range(hi, m):
                upper_positions.append((r, cc))
    blocks_iters = [list(gl_iter(F, d)) if d > 0 else [()] for d in dims]
    for diag in product(*blocks_iters):
        base = [[0] * m for _ in range(m)]
        for bi, blk in enumerate(diag):
            st = starts[bi]
            for a in range(len(blk)):
                for b in range(len(blk)):
                    base[st + a][st + b] = blk[a][b]
        if not upper_positions:
            yield tuple(tuple(r) for r in base)
            continue
        for values in product(F.elements(), repeat=len(upper_positions)):
            for (r, cc), v in zip(upper_positions, values):
                base[r][cc] = v
            yield tuple(tuple(row) for row in base)


def orbit_count_naive(m, dims, lam, p, cap=None):
    """Orbit count by averaging fixed points over the full acting group."""
    dims = validate_dims(m, dims)
    lam = tuple(lam)
    s, dl, c, D = space_shape(m, dims, lam)
    if D == 0:
        return 1
    porder = parabolic_order(dims, p)
    aorder = aut_order_value(lam, p)
    check_cap("group_size", porder * aorder, cap, what="naive Burnside")
    ring = zmod(p, lam[0])
    pair_counts = Counter()
    for h in automorphisms(lam, ring):
        pair_counts[h.induced_pair()] += 1
    F = GF(p)
    space = ExtSpace(m, dims, lam, p)
    total = 0
    for g in parabolic_iter(F, dims):
        ginv = mat_inv(F, g)
        wbar_inv = (
            exterior_square(F, mat_inv(F, space.gbar(g))) if space.c else None
        )
        for (Y, Z), cnt in pair_counts.items():
            t = space.fix_exponent(g, (Y, Z), ginv=ginv, wbar_inv=wbar_inv)
            total += cnt * (p**t)
    return check_burnside_integral(total, porder * aorder, what="naive engine")


def orbit_count(m, dims, lam, p, engine="typed", cap=None):
    if engine == "typed":
        return orbit_count_typed(m, dims, lam, p, cap)
    if engine == "naive":
        return orbit_count_naive(m, dims, lam, p, cap)
    raise ValueError(f"unknown engine {engine!r}")


# ---------------------------------------------------------------------------
# explicit orbit representatives (for materialisation and the oracle checks)


def gl_generators(F, n):
    if n == 0:
        return []
    gens = []
    if n == 1:
        if F.q > 2:
            gens.append(((F.primitive_element(),),))
        return gens
    # cyclic permutation, one transvection, one primitive scaling
    perm = [[0] * n for _ in range(n)]
    for i in range(n):
        perm[i][(i + 1) % n] = 1
    gens.append(tuple(tuple(r) for r in perm))
    trans = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    trans[0][1] = 1
    gens.append(tuple(tuple(r) for r in trans))
    if F.q > 2:
        scale = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        scale[0][0] = F.primitive_element()
        gens.append(tuple(tuple(r) for r in scale))
    return gens


def flag_group_generators(F, dims):
    """Generators of the block-upper-triangular flag stabilizer."""
    m = sum(dims)
    if m == 0:
        return []
    gens = []
    starts = []
    off = 0
    for d in dims:
        starts.append(off)
        off += d
    for bi, d in enumerate(dims):
        st = starts[bi]
        for blk in gl_generators(F, d):
            g = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
            for a in range(d):
                for b in range(d):
                    g[st + a][st + b] = blk[a][b]
            gens.append(tuple(tuple(r) for r in g))
    hi = 0
    for bi, d in enumerate(dims):
        lo = hi
        hi += d
        for r in range(lo, hi):
            for cc in range(hi, m):
                g = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
                g[r][cc] = 1
                gens.append(tuple(tuple(rr) for rr in g))
    return gens


def orbit_partition(m, dims, lam, p, cap=None):
    """Orbits of the full datum space under generator closure.

    Returns a list of (representative, orbit size); independent of both
    Burnside engines, so it serves as a third counting route in tests.
    """
    dims = validate_dims(m, dims)
    lam = tuple(lam)
    space = ExtSpace(m, dims, lam, p)
    check_cap("space_size", p**space.dim, cap, what="orbit space enumeration")
    F = GF(p)
    gen_pairs = []
    for g in flag_group_generators(F, dims):
        gen_pairs.append((g, None))
    if lam:
        ring = zmod(p, lam[0])
        ident = tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))
        for h in aut_generators(lam, ring):
            gen_pairs.append((ident, h.induced_pair()))
    s = space.s
    id_pair = (
        tuple(tuple(1 if i == j else 0 for j in range(s)) for i in range(s)),
        tuple(tuple(1 if i == j else 0 for j in range(s)) for i in range(s)),
    )
    seen = set()
    out = []
    for datum in space.all_data():
        if datum in seen:
            continue
        orbit = {datum}
        frontier = [datum]
        while frontier:
            new = []
            for x in frontier:
                for g, pair in gen_pairs:
                    y = space.action(g, pair if pair is not None else id_pair, x, checked=True)
                    if y not in orbit:
                        orbit.add(y)
                        new.append(y)
            frontier = new
        seen |= orbit
        out.append((min(orbit), len(orbit)))
    return out
