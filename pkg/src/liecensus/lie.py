"""Finite Lie rings of class at most two, and the passage to p-groups.

Two concrete representations:

* `PlainLieRing`: the additive group is M_lam itself and the bracket is
  given by its values on generator pairs (the oracle's representation);
* `ExtensionLieRing`: elements are pairs (a, b) with a in F_p^m and
  b in M_lam, addition twisted by the carry cocycle of a lift map, the
  bracket read through an alternating form into B[p] (the census
  materialisation).

For odd p, `lazard_group` turns such a ring into a group table via
x * y = x + y + (1/2)[x, y]; the inverse half is taken modulo the additive
exponent, so non-elementary additive groups work too.
"""

import numpy as np

from .caps import RefusalError
from .dvr import zmod
from .modules import module


class PlainLieRing:
    """Lie ring on the additive group M_lam with bracket values on generators.

    `values[(i, j)]` for i < j is the element [e_i, e_j]; the bracket kills
    p in both slots and its values must be central, which `is_admissible`
    checks.
    """

    def __init__(self, p, lam, values):
        self.p = p
        self.lam = tuple(lam)
        self.K = self.lam[0] if self.lam else 1
        self.ring = zmod(p, self.K)
        self.mod = module(self.ring, self.lam)
        self.g = len(self.lam)
        self.values = dict(values)
        self.size = self.mod.size

    def elements(self):
        return range(self.size)

    def zero(self):
        return 0

    def add(self, x, y):
        return self.mod.add(x, y)

    def neg(self, x):
        return self.mod.neg(x)

    def int_scalar(self, k, x):
        return self.mod.int_scalar(k, x)

    def _bar(self, x):
        """Coordinates of x modulo p."""
        return tuple(c % self.p for c in self.mod.coords(x))

    def bracket(self, x, y):
        bx, by = self._bar(x), self._bar(y)
        out = 0
        for i in range(self.g):
            for j in range(i + 1, self.g):
                c = (bx[i] * by[j] - bx[j] * by[i]) % self.p
                if c:
                    v = self.values.get((i, j), 0)
                    if v:
                        out = self.add(out, self.int_scalar(c, v))
        return out

    def additive_order(self, x):
        k = 1
        y = x
        while y != 0:
            y = self.add(y, x)
            k += 1
        return k

    def centre(self):
        gens = [self.mod.generator(i) for i in range(self.g)]
        return frozenset(
            x for x in self.elements() if all(self.bracket(x, g) == 0 for g in gens)
        )

    def half(self, v):
        """(1/2) v for odd p."""
        inv2 = pow(2, -1, self.p**self.K)
        return self.int_scalar(inv2, v)

    def is_admissible(self):
        """Bracket values killed by p and central; class <= 2 then follows."""
        gens = [self.mod.generator(i) for i in range(self.g)]
        for v in self.values.values():
            if self.int_scalar(self.p, v) != 0:
                return False
            if any(self.bracket(v, g) != 0 for g in gens):
                return False
        return True


class ExtensionLieRing:
    """Central extension of F_p^m by M_lam cut out by a datum (y, z).

    Elements are ints encoding (a, b) with a the quotient coordinate vector
    and b the ideal element; addition carries into the ideal along the lift
    prescribed by z (coordinate-wise minimal representatives).
    """

    def __init__(self, m, lam, p, datum):
        self.m = m
        self.lam = tuple(lam)
        self.p = p
        self.K = self.lam[0] if self.lam else 1
        self.ring = zmod(p, self.K)
        self.mod = module(self.ring, self.lam)
        self.s = len(self.lam)
        y, z = datum
        c = 0
        dl = m
        self.pairs = [(i, j) for i in range(dl) for j in range(i + 1, dl)]
        c = len(self.pairs)
        assert len(y) == self.s * c and len(z) == self.s * self.m
        # bracket values per quotient basis pair, inside B[p]
        self.bracket_vals = {}
        for idx, (i, j) in enumerate(self.pairs):
            coords = []
            for r in range(self.s):
                coeff = y[r * c + idx]
                coords.append((coeff * self.ring.t_pow(self.lam[r] - 1)) % (p ** self.lam[r]))
            self.bracket_vals[(i, j)] = self.mod.encode(tuple(coords))
        # lifts of z(e_i) into B: coordinate-wise minimal representatives
        self.lifts = []
        for i in range(m):
            coords = tuple(z[r * m + i] for r in range(self.s))
            self.lifts.append(self.mod.encode(coords))
        self.size = (p**m) * self.mod.size

    # -- encoding: x = a_index + p^m-block * b_index -------------------------

    def split(self, x):
        return x % (self.p**self.m), x // (self.p**self.m)

    def join(self, a, b):
        return a + (self.p**self.m) * b

    def elements(self):
        return range(self.size)

    def zero(self):
        return 0

    def _avec(self, a):
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def add(self, x, y):
        ax, bx = self.split(x)
        ay, by = self.split(y)
        va, vb = self._avec(ax), self._avec(ay)
        carry_sum = 0
        out_a = 0
        mult = 1
        for i in range(self.m):
            s = va[i] + vb[i]
            if s >= self.p:
                s -= self.p
                carry_sum = self.mod.add(carry_sum, self.lifts[i])
            out_a += s * mult
            mult *= self.p
        out_b = self.mod.add(self.mod.add(bx, by), carry_sum)
        return self.join(out_a, out_b)

    def neg(self, x):
        # every element is killed by p^(K+1): the quotient has exponent p and
        # p times any lift lands in the ideal, which p^K kills
        exponent = self.p ** (self.K + 1)
        return self.int_scalar(exponent - 1, x)

    def int_scalar(self, k, x):
        out = self.zero()
        base = x
        while k:
            if k & 1:
                out = self.add(out, base)
            base = self.add(base, base)
            k >>= 1
        return out

    def additive_order(self, x):
        k = 1
        y = x
        while y != 0:
            y = self.add(y, x)
            k += 1
        return k

    def bracket(self, x, y):
        ax, _ = self.split(x)
        ay, _ = self.split(y)
        va, vb = self._avec(ax), self._avec(ay)
        out = 0
        for (i, j), val in self.bracket_vals.items():
            if val:
                c = (va[i] * vb[j] - va[j] * vb[i]) % self.p
                if c:
                    out = self.mod.add(out, self.mod_int_scalar(c, val))
        return self.join(0, out)

    def mod_int_scalar(self, k, v):
        out = 0
        base = v
        while k:
            if k & 1:
                out = self.mod.add(out, base)
            base = self.mod.add(base, base)
            k >>= 1
        return out

    def ideal_elements(self):
        return [self.join(0, b) for b in self.mod.elements()]

    def centre(self):
        # the bracket factors through the quotient, so testing against lifts
        # of a quotient basis suffices
        basis = [self.join(self._basis_a(i), 0) for i in range(self.m)]
        return frozenset(
            x
            for x in self.elements()
            if all(self.bracket(x, g) == 0 for g in basis)
        )

    def _basis_a(self, i):
        return self.p**i

    def half(self, v):
        a, b = self.split(v)
        assert a == 0, "half only used on ideal elements (bracket values)"
        inv2 = pow(2, -1, self.p**self.K)
        return self.join(0, self.mod.int_scalar(inv2, b))

    def verify(self):
        """Order, central ideal, elementary quotient; raises on violation."""
        if self.size != self.p ** (self.m + sum(self.lam)):
            raise AssertionError("wrong order")
        for b in self.mod.elements():
            x = self.join(0, b)
            for i in range(self.m):
                if self.bracket(x, self.join(self._basis_a(i), 0)) != 0:
                    raise AssertionError("ideal not central")
        # p * lift(a_i) must equal the prescribed lift of z(e_i)
        for i in range(self.m):
            xi = self.join(self._basis_a(i), 0)
            if self.int_scalar(self.p, xi) != self.join(0, self.lifts[i]):
                raise AssertionError("lift relation violated")
        return True


def bracket_is_nilpotent(L):
    """[pE, E] = 0 and [[E, E], E] = 0, checked on all pairs/images."""
    elems = list(L.elements())
    values = set()
    for x in elems:
        px = L.int_scalar(L.p, x)
        for y in elems:
            if L.bracket(px, y) != 0:
                return False
        for y in elems:
            values.add(L.bracket(x, y))
    for v in values:
        for y in elems:
            if L.bracket(v, y) != 0:
                return False
    return True


def lazard_group(L, check=False):
    """Group multiplication table from a class-<=2 Lie ring, for odd p.

    Returns a numpy int32 table T with T[x, y] = index of x * y.
    """
    if L.p == 2:
        raise RefusalError("the group correspondence requires an odd prime")
    elems = list(L.elements())
    index = {x: i for i, x in enumerate(elems)}
    n = len(elems)
    T = np.zeros((n, n), dtype=np.int32)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            v = L.bracket(x, y)
            prod = L.add(L.add(x, y), L.half(v))
            T[i, j] = index[prod]
    if check:
        assert is_group_table(T)
    return T


# ---------------------------------------------------------------------------
# group tables


def is_group_table(T):
    n = T.shape[0]
    # identity: row/column of some e equal to range
    rng = np.arange(n)
    e_candidates = [i for i in range(n) if np.array_equal(T[i], rng) and np.array_equal(T[:, i], rng)]
    if not e_candidates:
        return False
    # associativity, fully vectorised: T[T[x,y],z] == T[x,T[y,z]]
    left = T[T, :]
    right = T[:, T.reshape(-1)].reshape(n, n, n)
    if not np.array_equal(left, right):
        return False
    # inverses: every row is a permutation containing e
    e = e_candidates[0]
    return all((T[i] == e).any() for i in range(n))


def group_identity(T):
    n = T.shape[0]
    rng = np.arange(n)
    for i in range(n):
        if np.array_equal(T[i], rng):
            return i
    raise ValueError("no identity")


def group_inverse_vector(T):
    n = T.shape[0]
    e = group_identity(T)
    inv = np.zeros(n, dtype=np.int64)
    for i in range(n):
        js = np.nonzero(T[i] == e)[0]
        inv[i] = js[0]
    return inv


def element_orders(T):
    n = T.shape[0]
    e = group_identity(T)
    orders = []
    for i in range(n):
        k = 1
        x = i
        while x != e:
            x = T[x, i]
            k += 1
        orders.append(k)
    return orders


def order_histogram(T):
    hist = {}
    for o in element_orders(T):
        hist[o] = hist.get(o, 0) + 1
    return tuple(sorted(hist.items()))


def commutator_table(T):
    n = T.shape[0]
    inv = group_inverse_vector(T)
    comm = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            comm[x, y] = T[T[inv[x], inv[y]], T[x, y]]
    return comm


def frattini_central_check(T):
    """[x, y^p] = 1 and [[x, y], z] = 1 for all x, y, z (p = prime order base)."""
    n = T.shape[0]
    e = group_identity(T)
    # p = smallest prime dividing the group order; tables here are p-groups
    p = _smallest_prime_factor(n)
    comm = commutator_table(T)
    powp = np.zeros(n, dtype=np.int64)
    for y in range(n):
        x = e
        for _ in range(p):
            x = T[x, y]
        powp[y] = x
    for x in range(n):
        for y in range(n):
            if comm[x, powp[y]] != e:
                return False
    comm_values = set(int(v) for v in comm.reshape(-1))
    for v in comm_values:
        for z in range(n):
            if comm[v, z] != e:
                return False
    return True


def _smallest_prime_factor(n):
    f = 2
    while f * f <= n:
        if n % f == 0:
            return f
        f += 1
    return n


def group_fingerprint(T):
    n = T.shape[0]
    comm = commutator_table(T)
    e = group_identity(T)
    centre = sum(
        1 for x in range(n) if all(comm[x, y] == e for y in range(n))
    )
    derived = len(set(int(v) for v in comm.reshape(-1)))
    return (n, order_histogram(T), centre, derived)


def _generating_sequence(T):
    """A short generating sequence by greedy closure growth."""
    n = T.shape[0]
    e = group_identity(T)
    gens = []
    closure = {e}
    while len(closure) < n:
        best = None
        for x in range(n):
            if x in closure:
                continue
            new = _closure(T, closure, x)
            if best is None or len(new) > len(best[1]):
                best = (x, new)
            if len(new) == n:
                break
        gens.append(best[0])
        closure = best[1]
    return gens


def _closure(T, closed, x):
    out = set(closed)
    frontier = [x]
    out.add(x)
    while frontier:
        new = []
        for a in frontier:
            for b in list(out):
                for c in (int(T[a, b]), int(T[b, a])):
                    if c not in out:
                        out.add(c)
                        new.append(c)
        frontier = new
    return out


def groups_isomorphic(T1, T2):
    """Backtracking isomorphism search on multiplication tables."""
    if T1.shape != T2.shape:
        return False
    if group_fingerprint(T1) != group_fingerprint(T2):
        return False
    n = T1.shape[0]
    orders1 = element_orders(T1)
    orders2 = element_orders(T2)
    gens = _generating_sequence(T1)
    e1, e2 = group_identity(T1), group_identity(T2)

    def words(gens_imgs):
        """Closure of the partial map; None on conflict."""
        mapping = {e1: e2}
        for g, img in gens_imgs:
            mapping[g] = img
        frontier = list(mapping.keys())
        while frontier:
            new = []
            for a in frontier:
                for b in list(mapping.keys()):
                    for x, y in ((a, b), (b, a)):
                        prod1 = int(T1[x, y])
                        prod2 = int(T2[mapping[x], mapping[y]])
                        if prod1 in mapping:
                            if mapping[prod1] != prod2:
                                return None
                        else:
                            mapping[prod1] = prod2
                            new.append(prod1)
            frontier = new
        if len(set(mapping.values())) != len(mapping):
            return None
        return mapping

    def backtrack(i, chosen):
        if i == len(gens):
            mapping = words(chosen)
            return mapping is not None and len(mapping) == n
        g = gens[i]
        for img in range(n):
            if orders2[img] != orders1[g]:
                continue
            mapping = words(chosen + [(g, img)])
            if mapping is None:
                continue
            if backtrack(i + 1, chosen + [(g, img)]):
                return True
        return False

    return backtrack(0, [])


def lie_isomorphic(L1, L2):
    """Backtracking additive+bracket isomorphism between small Lie rings."""
    if L1.size != L2.size or L1.p != L2.p:
        return False
    orders1 = {x: L1.additive_order(x) for x in L1.elements()}
    orders2 = {x: L2.additive_order(x) for x in L2.elements()}
    hist1 = sorted(orders1.values())
    hist2 = sorted(orders2.values())
    if hist1 != hist2:
        return False

    def closure(pairs):
        mapping = {L1.zero(): L2.zero()}
        for a, b in pairs:
            mapping[a] = b
        frontier = list(mapping.keys())
        while frontier:
            new = []
            for a in frontier:
                for b in list(mapping.keys()):
                    for s1, s2 in (
                        (L1.add(a, b), L2.add(mapping[a], mapping[b])),
                        (L1.bracket(a, b), L2.bracket(mapping[a], mapping[b])),
                    ):
                        if s1 in mapping:
                            if mapping[s1] != s2:
                                return None
                        else:
                            mapping[s1] = s2
                            new.append(s1)
            frontier = new
        if len(set(mapping.values())) != len(mapping):
            return None
        return mapping

    gens = _lie_generating_sequence(L1)

    def backtrack(i, chosen):
        if i == len(gens):
            mapping = closure(chosen)
            return mapping is not None and len(mapping) == L1.size
        g = gens[i]
        for img in L2.elements():
            if orders2[img] != orders1[g]:
                continue
            mapping = closure(chosen + [(g, img)])
            if mapping is None:
                continue
            if backtrack(i + 1, chosen + [(g, img)]):
                return True
        return False

    return backtrack(0, [])


def _lie_generating_sequence(L):
    full = set(L.elements())
    gens = []
    closed = {L.zero()}

    def grow(base, x):
        out = set(base)
        frontier = [x]
        out.add(x)
        while frontier:
            new = []
            for a in frontier:
                for b in list(out):
                    for c in (L.add(a, b), L.bracket(a, b)):
                        if c not in out:
                            out.add(c)
                            new.append(c)
            frontier = new
        return out

    while len(closed) < len(full):
        best = None
        for x in full:
            if x in closed:
                continue
            new = grow(closed, x)
            if best is None or len(new) > len(best[1]):
                best = (x, new)
            if len(new) == len(full):
                break
        gens.append(best[0])
        closed = best[1]
    return gens
