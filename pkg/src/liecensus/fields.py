"""Exact arithmetic in finite fields F_{p^d} and univariate polynomials.

Field elements are plain ints in ``range(q)``.  For a prime field the int is
the residue itself; for an extension field it encodes the coordinate vector
in base p (digit i = coefficient of X^i) relative to a fixed modulus, the
lexicographically least monic irreducible of the requested degree.  That
choice makes every field canonical and runs reproducible.

Polynomials over a field are tuples of coefficients, constant term first,
with no trailing zeros; the zero polynomial is the empty tuple.
"""

from functools import lru_cache

_TABLE_MAX = 4096  # largest field that gets dense mul/add tables


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def first_primes(k, start=2):
    out = []
    n = start
    while len(out) < k:
        if is_prime(n):
            out.append(n)
        n += 1
    return out


def odd_primes(k):
    return first_primes(k, start=3)


def prime_power(q):
    """Return (p, d) with q = p^d, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p == 0:
            d = 0
            m = q
            while m % p == 0:
                m //= p
                d += 1
            return (p, d) if m == 1 else None
    return (q, 1)


def prime_powers(k):
    """First k prime powers >= 2, ascending."""
    out = []
    n = 2
    while len(out) < k:
        if prime_power(n) is not None:
            out.append(n)
        n += 1
    return out


def mobius(n):
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


class _Field:
    """Finite field with q = p^d elements, elements encoded as ints."""

    def __init__(self, q):
        pd = prime_power(q)
        if pd is None:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p, self.d = pd
        if self.d == 1:
            self.modulus = None
        else:
            base = GF(self.p)
            self.modulus = irreducibles(base, self.d)[0]
        self._mul = None
        self._inv = None
        if self.d > 1:
            if q > _TABLE_MAX:
                raise ValueError(f"extension field of size {q} over the table limit")
            self._build_tables()

    # -- encoding ---------------------------------------------------------

    def coords(self, a):
        p = self.p
        out = []
        for _ in range(self.d):
            out.append(a % p)
            a //= p
        return tuple(out)

    def encode(self, coords):
        a = 0
        for c in reversed(coords):
            a = a * self.p + (c % self.p)
        return a

    # -- arithmetic -------------------------------------------------------

    def add(self, a, b):
        if self.d == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.d):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        if self.d == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.d):
            out += ((-(a % p)) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.d == 1:
            return (a * b) % self.p
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.d == 1:
            return pow(a, -1, self.p)
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        out = 1
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def primitive_element(self):
        """A multiplicative generator of the unit group."""
        order = self.q - 1
        for a in range(1, self.q):
            seen = 1
            x = a
            while x != 1:
                x = self.mul(x, a)
                seen += 1
            if seen == order:
                return a
        raise AssertionError("no primitive element found")

    def _build_tables(self):
        q, p, d = self.q, self.p, self.d
        mod = self.modulus
        mul = [[0] * q for _ in range(q)]
        base = GF(p)
        for a in range(q):
            ca = _tuple_poly(self.coords(a))
            for b in range(a, q):
                cb = _tuple_poly(self.coords(b))
                prod = pmul(base, ca, cb)
                prod = pmod(base, prod, mod)
                prod = prod + (0,) * (d - len(prod))
                v = self.encode(prod)
                mul[a][b] = v
                mul[b][a] = v
        self._mul = mul
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = inv

    def __repr__(self):
        return f"GF({self.q})"


def _tuple_poly(coeffs):
    t = tuple(coeffs)
    while t and t[-1] == 0:
        t = t[:-1]
    return t


@lru_cache(maxsize=None)
def GF(q):
    return _Field(q)


# -- polynomials over a field ----------------------------------------------

def pnormal(t):
    t = tuple(t)
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def pdeg(f):
    return len(f) - 1


def padd(F, f, g):
    n = max(len(f), len(g))
    f = f + (0,) * (n - len(f))
    g = g + (0,) * (n - len(g))
    return pnormal(F.add(a, b) for a, b in zip(f, g))


def pneg(F, f):
    return tuple(F.neg(a) for a in f)


def psub(F, f, g):
    return padd(F, f, pneg(F, g))


def pmul(F, f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b == 0:
                continue
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return pnormal(out)


def pscale(F, c, f):
    return pnormal(F.mul(c, a) for a in f)


def pdivmod(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F.inv(g[-1])
    rem = list(f)
    quo = [0] * max(0, len(f) - len(g) + 1)
    while len(rem) >= len(g) and pnormal(rem):
        rem = list(pnormal(rem))
        if len(rem) < len(g):
            break
        c = F.mul(rem[-1], inv_lead)
        k = len(rem) - len(g)
        quo[k] = c
        for i, b in enumerate(g):
            rem[k + i] = F.sub(rem[k + i], F.mul(c, b))
        rem = rem[:-1]
    return pnormal(quo), pnormal(rem)


def pmod(F, f, g):
    return pdivmod(F, f, g)[1]


def ppow(F, f, k):
    out = (1,)
    base = f
    while k:
        if k & 1:
            out = pmul(F, out, base)
        base = pmul(F, base, base)
        k >>= 1
    return out


def peval(F, f, x):
    out = 0
    for c in reversed(f):
        out = F.add(F.mul(out, x), c)
    return out


def pmonic(F, f):
    if not f:
        return f
    return pscale(F, F.inv(f[-1]), f)


X_POLY = (0, 1)


@lru_cache(maxsize=None)
def _irreducibles_cached(q, d):
    F = GF(q)
    if d == 1:
        return tuple((c, 1) for c in F.elements())
    lower = [f for dd in range(1, d // 2 + 1) for f in _irreducibles_cached(q, dd)]
    out = []
    # iterate monic degree-d polynomials in lex order on (c_0, ..., c_{d-1})
    coeffs = [0] * d
    while True:
        f = tuple(coeffs) + (1,)
        if d <= 3:
            # degree 2 or 3: irreducible iff no root
            if all(peval(F, f, x) != 0 for x in F.elements()):
                out.append(f)
        else:
            if all(pmod(F, f, g) for g in lower):
                out.append(f)
        i = d - 1
        while i >= 0 and coeffs[i] == q - 1:
            coeffs[i] = 0
            i -= 1
        if i < 0:
            break
        coeffs[i] += 1
    return tuple(sorted(out))


def irreducibles(F, d):
    """All monic irreducible polynomials of degree d over F, lex order."""
    if d < 1:
        raise ValueError("degree must be positive")
    return list(_irreducibles_cached(F.q, d))


def num_irreducibles(q, d):
    """Count of monic irreducibles of degree d over F_q (Moebius formula)."""
    total = sum(mobius(e) * q ** (d // e) for e in divisors(d))
    assert total % d == 0
    return total // d
