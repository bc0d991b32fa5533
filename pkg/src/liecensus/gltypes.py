"""Conjugacy-class types for tuples of invertible matrices over F_q.

A class of a tuple (g_1, ..., g_r) in a product of general linear groups is
described by which irreducible polynomials appear and with which partition
of Jordan-block sizes in each component.  Forgetting the polynomials but
keeping their degrees gives the *type*; keeping them gives the realised
class key.  Canonical form for a type: the multiset of columns
``(degree, (partition_1, ..., partition_r))`` as a sorted tuple.

The intersection counts of a class with a flag stabilizer and with the
image of the reduction map on module automorphisms are computed here from
chain-count polynomials; they are exact integers by construction and every
division is checked.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .caps import InternalInconsistencyError
from .fields import irreducibles, num_irreducibles, pdeg
from .linalg import charpoly, gl_order, kernel_dim, mat_mul, poly_apply
from .modules import aut_order_value, chain_value, conjugate_from_counts, partitions


# ---------------------------------------------------------------------------
# module data and type keys


def matrix_module_data(F, A):
    """Map (irreducible polynomial) -> partition for the module given by A.

    Factors the characteristic polynomial by scanning the irreducible lists
    in lex order and reads each partition off kernel-dimension jumps.
    """
    n = len(A)
    if n == 0:
        return {}
    out = {}
    total = 0
    for d in range(1, n + 1):
        if total == n:
            break
        for f in irreducibles(F, d):
            if total + d > n:
                break
            B = poly_apply(F, f, A)
            k1 = kernel_dim(F, B)
            if k1 == 0:
                continue
            counts = []
            prev = 0
            Bk = B
            kd = k1
            while kd - prev > 0:
                assert (kd - prev) % d == 0
                counts.append((kd - prev) // d)
                prev = kd
                Bk = mat_mul(F, Bk, B)
                kd = kernel_dim(F, Bk)
            part = conjugate_from_counts(counts)
            out[f] = part
            total += d * sum(part)
    assert total == n, "module decomposition does not fill the space"
    return out


def tuple_module_data(F, mats):
    """Per-component module data for a tuple, on a shared polynomial index."""
    datas = [matrix_module_data(F, A) for A in mats]
    polys = sorted(set().union(*[d.keys() for d in datas]) if datas else [])
    return [(f, tuple(d.get(f, ()) for d in datas)) for f in polys]


def type_key(columns):
    """Canonical type: sorted multiset of (degree, partition column)."""
    return tuple(sorted(columns))


def type_of_tuple(F, mats):
    """The type of a tuple of invertible matrices."""
    cols = []
    for f, parts in tuple_module_data(F, mats):
        if f[0] == 0:
            raise ValueError("matrix is not invertible (X appears)")
        cols.append((pdeg(f), parts))
    return type_key(cols)


def realised_class_key(F, mats):
    """Canonical identifier of the conjugacy class itself (polynomials kept)."""
    return tuple(sorted(tuple_module_data(F, mats)))


def pretype_aut_order(columns):
    """Automorphisms of the indexing: product of column-multiplicity factorials."""
    counts = {}
    for col in columns:
        counts[col] = counts.get(col, 0) + 1
    out = 1
    for c in counts.values():
        out *= factorial(c)
    return out


def num_invertible_irreducibles(q, d):
    """Monic irreducibles of degree d that can appear in an invertible matrix."""
    n = num_irreducibles(q, d)
    return n - 1 if d == 1 else n


def realisation_count(columns, q):
    """Injective assignments of irreducible polynomials to the index set."""
    by_degree = {}
    for d, _ in columns:
        by_degree[d] = by_degree.get(d, 0) + 1
    out = 1
    for d, c in by_degree.items():
        avail = num_invertible_irreducibles(q, d)
        for i in range(c):
            out *= avail - i
    return max(out, 0)


def class_count_of_type(columns, q):
    """Number of conjugacy classes of this type in the ambient tuple group."""
    r = realisation_count(columns, q)
    a = pretype_aut_order(columns)
    if r % a:
        raise InternalInconsistencyError("realisation count not divisible by pretype auts")
    return r // a


def class_size(columns, q, component=None):
    """Size of a conjugacy class of this type; all components by default."""
    columns = tuple(columns)
    if not columns:
        return 1
    ncomp = len(columns[0][1])
    comps = range(ncomp) if component is None else [component]
    out = 1
    for i in comps:
        n_i = sum(d * sum(parts[i]) for d, parts in columns)
        num = gl_order(n_i, q)
        den = 1
        for d, parts in columns:
            den *= aut_order_value(parts[i], q**d)
        if num % den:
            raise InternalInconsistencyError("class size division not exact")
        out *= num // den
    return out


def type_projection(columns, keep):
    """Project a type onto the components listed in `keep`, dropping dead columns."""
    out = []
    for d, parts in columns:
        newparts = tuple(parts[i] for i in keep)
        if any(p for p in newparts):
            out.append((d, newparts))
    return type_key(out)


# ---------------------------------------------------------------------------
# Gaussian coefficients and flags


def gauss_binom(n, k, q):
    """Number of k-dimensional subspaces of F_q^n, exact."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(1, k + 1):
        num *= q ** (n - k + i) - 1
        den *= q**i - 1
    assert num % den == 0
    return num // den


def flag_total(dims, q):
    """Number of flags with the given dimension jumps."""
    n = sum(dims)
    out = 1
    rest = n
    for d in dims:
        out *= gauss_binom(rest, d, q)
        rest -= d
    return out


def parabolic_order(dims, q):
    out = 1
    for d in dims:
        out *= gl_order(d, q)
    cross = 0
    for i in range(len(dims)):
        for j in range(i + 1, len(dims)):
            cross += dims[i] * dims[j]
    return out * q**cross


# ---------------------------------------------------------------------------
# uniform-family intersection counts


def fixed_flag_count(columns, q):
    """Flags of the prescribed subquotient data fixed by a class member.

    `columns` are (d, (kappa, nu_1, ..., nu_l)); the count is the product of
    chain counts evaluated at q^d, one factor per polynomial.
    """
    out = 1
    for d, parts in columns:
        kappa, steps = parts[0], parts[1:]
        out *= chain_value(kappa, steps, q**d)
        if out == 0:
            return 0
    return out


@lru_cache(maxsize=None)
def flag_stab_intersection(columns, dims, q):
    """|C ∩ J| for a class C of full-flag-data type and the flag stabilizer J.

    The count is (size of the projected class) * (fixed flags) / (all flags);
    the division must be exact.
    """
    columns = tuple(columns)
    dims = tuple(dims)
    size_g = class_size(columns, q, component=0)
    beta = fixed_flag_count(columns, q)
    total = flag_total(dims, q)
    val = Fraction(size_g * beta, total)
    if val.denominator != 1:
        raise InternalInconsistencyError("flag-stabilizer intersection not integral")
    return val.numerator


def _extensions(columns_ss, u):
    """Column-wise diagonal-block data compatible with an (s, s)-type.

    Yields tuples of (d, (lamY, lamZ, rho_1..rho_r)) columns whose row sums
    match the multiplicities u; zero-weight candidates are filtered later by
    the chain counts themselves.
    """
    r = len(u)
    cols = list(columns_ss)

    def per_column_options(col):
        d, (lamY, lamZ) = col
        total = sum(lamY)
        opts = []

        def rec(i, remaining, chosen):
            if i == r - 1:
                for rho in partitions(remaining):
                    opts.append(tuple(chosen + [rho]))
                return
            for take in range(remaining + 1):
                for rho in partitions(take):
                    rec(i + 1, remaining - take, chosen + [rho])

        rec(0, total, [])
        return opts

    options = [per_column_options(c) for c in cols]

    def rec2(j, acc, used):
        if j == len(cols):
            if all(used[i] == u[i] for i in range(r)):
                yield tuple(acc)
            return
        d, (lamY, lamZ) = cols[j]
        for rhos in options[j]:
            newused = [used[i] + d * sum(rhos[i]) for i in range(r)]
            if any(newused[i] > u[i] for i in range(r)):
                continue
            yield from rec2(j + 1, acc + [(d, (lamY, lamZ) + rhos)], newused)

    yield from rec2(0, [], [0] * r)


@lru_cache(maxsize=None)
def induced_pair_class_intersection(u, columns_ss, q):
    """|C ∩ im(reduction)| for a class C of GL_s x GL_s of the given type.

    Decomposes through the graph subgroup carrying the shared diagonal
    blocks: each compatible extension contributes a product of two
    flag-stabilizer intersections divided by the diagonal class size.
    """
    u = tuple(u)
    columns_ss = tuple(columns_ss)
    for d, (lamY, lamZ) in columns_ss:
        if sum(lamY) != sum(lamZ):
            return 0
    aut_base = pretype_aut_order(columns_ss)
    r = len(u)
    total = 0
    ext_keys = {type_key(ext) for ext in _extensions(columns_ss, u)}
    for ext_cols in sorted(ext_keys):
        aut_ext = pretype_aut_order(ext_cols)
        if aut_base % aut_ext:
            raise InternalInconsistencyError("pretype aut ratio not integral")
        mult = aut_base // aut_ext
        cols1 = tuple(
            (d, (parts[0],) + tuple(parts[2:][::-1])) for d, parts in ext_cols
        )
        cols2 = tuple((d, (parts[1],) + tuple(parts[2:])) for d, parts in ext_cols)
        pi1 = flag_stab_intersection(type_key(cols1), tuple(reversed(u)), q)
        if pi1 == 0:
            continue
        pi2 = flag_stab_intersection(type_key(cols2), u, q)
        if pi2 == 0:
            continue
        pi0 = 1
        for i in range(r):
            cols0 = tuple(
                (d, (parts[2 + i],)) for d, parts in ext_cols if parts[2 + i]
            )
            pi0 *= class_size(type_key(cols0), q, component=0)
        val = Fraction(pi1 * pi2, pi0)
        if val.denominator != 1:
            raise InternalInconsistencyError("diagonal-block division not integral")
        total += mult * val.numerator
    return total
