"""Finite quotients of discrete valuation rings.

Two kinds are supported, both with residue field of size q and nilpotent
uniformizer t with t^K = 0:

* ``zmod(p, K)``   : Z / p^K, uniformizer p, elements are ints mod p^K;
* ``tser(q, K)``   : F_q[t] / t^K, uniformizer t, elements are base-q ints
  whose digit i is the coefficient of t^i (a field element of GF(q)).

Every module in scope is annihilated by t^K, so these quotients carry all
the arithmetic the full rings would.
"""

from functools import lru_cache

from .fields import GF, is_prime


class DvrQuot:
    """Common interface for both quotient kinds; elements are ints < size."""

    def __init__(self, kind, field, K):
        self.kind = kind
        self.field = field     # residue field
        self.q = field.q       # residue field size
        self.K = K
        self.size = self.q**K
        if kind == "zmod":
            self.p = field.p
            self.t = self.p % self.size
        else:
            self.t = self.q if K > 1 else 0  # index of the element t
        self._mul_table = None

    def key(self):
        return (self.kind, self.q, self.K)

    def elements(self):
        return range(self.size)

    # -- digits (tser) ------------------------------------------------------

    def _digits(self, a):
        q = self.q
        out = []
        for _ in range(self.K):
            out.append(a % q)
            a //= q
        return out

    def _undigits(self, ds):
        a = 0
        for d in reversed(ds):
            a = a * self.q + d
        return a

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        if self.kind == "zmod":
            return (a + b) % self.size
        F = self.field
        q = self.q
        out = 0
        mult = 1
        for _ in range(self.K):
            out += F.add(a % q, b % q) * mult
            a //= q
            b //= q
            mult *= q
        return out

    def neg(self, a):
        if self.kind == "zmod":
            return (-a) % self.size
        return self._undigits([self.field.neg(d) for d in self._digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.kind == "zmod":
            return (a * b) % self.size
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_tser(a, b)

    def _mul_tser(self, a, b):
        F = self.field
        da, db = self._digits(a), self._digits(b)
        out = [0] * self.K
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                if y == 0 or i + j >= self.K:
                    continue
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return self._undigits(out)

    def build_mul_table(self):
        if self.kind != "zmod" and self._mul_table is None and self.size <= 2048:
            self._mul_table = [
                [self._mul_tser(a, b) for b in range(self.size)]
                for a in range(self.size)
            ]

    def val(self, a):
        """t-adic valuation in [0, K], with val(0) = K as the zero sentinel."""
        if a == 0:
            return self.K
        if self.kind == "zmod":
            v = 0
            while a % self.p == 0:
                a //= self.p
                v += 1
            return v
        ds = self._digits(a)
        for i, d in enumerate(ds):
            if d:
                return i
        return self.K

    def is_unit(self, a):
        return self.val(a) == 0

    def inv(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError("inverse of a non-unit")
        if self.kind == "zmod":
            return pow(a, -1, self.size)
        # invert the unit residue, then lift by Newton iteration on 1 - a*x
        x = self.field.inv(a % self.q)
        while True:
            e = self.sub(1, self.mul(a, x))
            if e == 0:
                return x
            x = self.add(x, self.mul(x, e))

    def t_pow(self, k):
        if k >= self.K:
            return 0
        if self.kind == "zmod":
            return self.p**k
        return self.q**k

    def mul_t(self, a):
        return self.mul(self.t, a)

    def t_quotient(self, a, k):
        """Exact division by t^k; the argument must have valuation >= k."""
        if k == 0:
            return a
        if a == 0:
            return 0
        if self.kind == "zmod":
            pk = self.p**k
            assert a % pk == 0
            return a // pk
        ds = self._digits(a)
        assert all(d == 0 for d in ds[:k])
        return self._undigits(ds[k:] + [0] * k)

    def reduce_mod_t(self, a, j):
        """Canonical representative of a modulo t^j (an int < q^j)."""
        if self.kind == "zmod":
            return a % (self.p**j)
        return a % (self.q**j)

    def residue(self, a):
        """Image in the residue field."""
        return a % self.q if self.kind != "zmod" else a % self.p

    def scalar(self, k, a):
        """Multiplication by an ordinary integer."""
        if self.kind == "zmod":
            return (k * a) % self.size
        out = 0
        x = a
        k %= self.field.p
        for _ in range(k):
            out = self.add(out, x)
        return out

    def __repr__(self):
        if self.kind == "zmod":
            return f"Z/{self.p}^{self.K}"
        return f"F{self.q}[t]/t^{self.K}"


@lru_cache(maxsize=None)
def zmod(p, K):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return DvrQuot("zmod", GF(p), K)


@lru_cache(maxsize=None)
def tser(q, K):
    return DvrQuot("tser", GF(q), K)


def ring_by_key(key):
    kind, q, K = key
    return zmod(q, K) if kind == "zmod" else tser(q, K)
