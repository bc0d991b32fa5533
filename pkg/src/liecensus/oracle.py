"""Brute-force ground truth: direct enumeration of the census quantity.

For each abelian p-group type of order p^n, enumerate every admissible
bracket table (alternating, factoring through the mod-p quotient, image
central) and count isomorphism classes as orbits under the automorphism
group of the additive group.  Orbits are found by closure under a
generating set; for small automorphism groups a Burnside count over the
full stream and a canonical-form count cross-validate the closure route.

Nothing here shares code with the census engines beyond basic module
plumbing, which is what makes the agreement census == oracle meaningful.
"""

from itertools import product

from .caps import check_cap
from .dvr import zmod
from .fields import GF
from .gltypes import gauss_binom
from .lie import PlainLieRing
from .linalg import mat_inv
from .modules import (
    aut_generators,
    aut_order_value,
    automorphisms,
    module,
    partitions,
)


def _subspaces_of(F, g):
    """All subspaces of F^g as (set of vectors, rref rows)."""
    from itertools import combinations

    q = F.q
    vectors = list(product(range(q), repeat=g))
    out = []
    for k in range(g + 1):
        for pivots in combinations(range(g), k):
            free_positions = []
            for r, pc in enumerate(pivots):
                for c in range(pc + 1, g):
                    if c not in pivots:
                        free_positions.append((r, c))
            for fill in product(range(q), repeat=len(free_positions)):
                rows = [[0] * g for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), v in zip(free_positions, fill):
                    rows[r][c] = v
                span = {(0,) * g}
                for row in rows:
                    multiples = [
                        tuple(F.mul(c, x) for x in row) for c in range(q)
                    ]
                    span = {
                        tuple(F.add(a, b) for a, b in zip(s, mvec))
                        for s in span
                        for mvec in multiples
                    }
                out.append((frozenset(span), tuple(tuple(r) for r in rows)))
    return out


def _table_estimate(p, lam):
    g = len(lam)
    k2 = sum(1 for a in lam if a >= 2)
    total = 0
    for d in range(g + 1):
        gbar = g - d
        pairs = gbar * (gbar - 1) // 2
        total += gauss_binom(g, d, p) * (p ** (d + k2)) ** pairs
    return total


def valid_bracket_tables(p, lam, cap=None):
    """Every admissible bracket table on the abelian group of type lam.

    A table assigns to each generator pair (i < j) a value in A[p]; it is
    admissible when the subgroup its values generate maps into the radical
    of the induced alternating form, which is exactly the centrality of the
    bracket image.
    """
    lam = tuple(lam)
    g = len(lam)
    if g <= 1:
        return [()]
    check_cap("table_count", _table_estimate(p, lam), cap, what="oracle bracket tables")
    F = GF(p)
    ring = zmod(p, lam[0])
    A = module(ring, lam)
    torsion = sorted(A.torsion_set(1))
    pairs = [(i, j) for i in range(g) for j in range(i + 1, g)]
    found = set()
    for span, rows in _subspaces_of(F, g):
        d = len(rows)
        gbar = g - d
        if gbar < 2:
            found.add((0,) * len(pairs))
            continue
        target = [w for w in torsion if tuple(c % p for c in A.coords(w)) in span]
        # quotient map: reduce a vector by the rref rows, read non-pivot coords
        pivots = [next(i for i, x in enumerate(row) if x) for row in rows]
        nonpivots = [c for c in range(g) if c not in pivots]

        def project(vec):
            v = list(vec)
            for row, pc in zip(rows, pivots):
                if v[pc]:
                    f = v[pc]
                    v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, row)]
            return tuple(v[c] for c in nonpivots)

        basis_proj = [project(tuple(1 if k == i else 0 for k in range(g))) for i in range(g)]
        qpairs = [(k, l) for k in range(gbar) for l in range(k + 1, gbar)]
        for choice in product(target, repeat=len(qpairs)):
            w = dict(zip(qpairs, choice))
            table = []
            for (i, j) in pairs:
                pi, pj = basis_proj[i], basis_proj[j]
                acc = 0
                for (k, l) in qpairs:
                    coeff = (pi[k] * pj[l] - pi[l] * pj[k]) % p
                    if coeff and w[(k, l)]:
                        acc = A.add(acc, A.int_scalar(coeff, w[(k, l)]))
                table.append(acc)
            found.add(tuple(table))
    return sorted(found)


def _aut_action_data(p, lam):
    """Generators of Aut(A) as (apply table on A, inverse matrix on A/pA)."""
    lam = tuple(lam)
    ring = zmod(p, lam[0])
    A = module(ring, lam)
    F = GF(p)
    out = []
    for h in aut_generators(lam, ring):
        apply_table = [h.apply(x) for x in A.elements()]
        Yinv = mat_inv(F, h.induced_pair()[0])
        out.append((apply_table, Yinv))
    return A, F, out


def _transform_table(A, F, p, g, pairs, table, apply_table, Yinv):
    """The table of the relabelled bracket under one automorphism."""
    out = []
    for (i, j) in pairs:
        acc = 0
        for idx, (k, l) in enumerate(pairs):
            coeff = (Yinv[k][i] * Yinv[l][j] - Yinv[l][i] * Yinv[k][j]) % p
            if coeff:
                v = table[idx]
                if v:
                    acc = A.add(acc, A.int_scalar(coeff, v))
        out.append(apply_table[acc])
    return tuple(out)


def orbit_count_tables(p, lam, tables):
    """Orbits of Aut(A) on the admissible tables, by generator closure."""
    lam = tuple(lam)
    g = len(lam)
    if g <= 1 or not tables:
        return len(tables), list(tables)
    pairs = [(i, j) for i in range(g) for j in range(i + 1, g)]
    A, F, gens = _aut_action_data(p, lam)
    table_set = set(tables)
    seen = set()
    reps = []
    for t in tables:
        if t in seen:
            continue
        orbit = {t}
        frontier = [t]
        while frontier:
            new = []
            for cur in frontier:
                for apply_table, Yinv in gens:
                    nxt = _transform_table(A, F, p, g, pairs, cur, apply_table, Yinv)
                    assert nxt in table_set, "orbit left the admissible set"
                    if nxt not in orbit:
                        orbit.add(nxt)
                        new.append(nxt)
            frontier = new
        seen |= orbit
        reps.append(min(orbit))
    return len(reps), reps


def orbit_count_tables_burnside(p, lam, tables, cap=None):
    """Burnside cross-check: average fixed tables over the full stream."""
    lam = tuple(lam)
    g = len(lam)
    if g <= 1 or not tables:
        return len(tables)
    ring = zmod(p, lam[0])
    A = module(ring, lam)
    F = GF(p)
    pairs = [(i, j) for i in range(g) for j in range(i + 1, g)]
    table_set = set(tables)
    total = 0
    count = 0
    for h in automorphisms(lam, ring, cap):
        apply_table = [h.apply(x) for x in A.elements()]
        Yinv = mat_inv(F, h.induced_pair()[0])
        fixed = sum(
            1
            for t in table_set
            if _transform_table(A, F, p, g, pairs, t, apply_table, Yinv) == t
        )
        total += fixed
        count += 1
    assert total % count == 0
    return total // count


def enumerate_lie_rings(n, p, cap=None, with_reps=False):
    """Count (and optionally materialise) the census classes directly."""
    total = 0
    reps = []
    for lam in partitions(n):
        tables = valid_bracket_tables(p, lam, cap)
        cnt, rep_tables = orbit_count_tables(p, lam, tables)
        total += cnt
        if with_reps:
            g = len(lam)
            pairs = [(i, j) for i in range(g) for j in range(i + 1, g)]
            for t in rep_tables:
                ring = PlainLieRing(p, lam, dict(zip(pairs, t)))
                assert ring.is_admissible()
                reps.append(ring)
    if with_reps:
        return total, reps
    return total


def table_is_admissible(p, lam, table):
    """Tripwire used by tests: re-check a table through the ring axioms."""
    g = len(lam)
    pairs = [(i, j) for i in range(g) for j in range(i + 1, g)]
    ring = PlainLieRing(p, lam, dict(zip(pairs, table)))
    return ring.is_admissible()
