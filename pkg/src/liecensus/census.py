"""The census: class-2 Lie rings of order p^n with central Frattini ideal.

Every such ring E, taken with B = Z(E), has an elementary abelian quotient
E/B of some dimension m and a centre of some partition type lam, and the
number of isomorphism classes with those invariants is computed by reverse
induction on flag refinements: the orbit count of the full parameter space
minus the classes whose centre is strictly larger, redistributed over the
ways the extra central part can sit inside the quotient.

`census(n, p)` sums the exact-centre counts over all (m, lam) with
m + |lam| = n; `materialize` turns an orbit representative into an honest
Lie ring for the oracle-facing checks.
"""

from dataclasses import dataclass, field

from .caps import InternalInconsistencyError
from .lie import ExtensionLieRing, PlainLieRing
from .modules import partitions
from .orbits import orbit_count, orbit_partition, space_shape, validate_dims

_X_MEMO = {}


def count_with_exact_center(m, dims, lam, p, engine="typed", cap=None):
    """Classes in the flagged family whose last flag member is the centre.

    Base case: when the flag is a complete refinement the last proper member
    is everything, so the constraint is vacuous; otherwise subtract, over
    k >= 1, the classes whose centre exceeds the flag member by dimension k.
    """
    dims = validate_dims(m, dims)
    lam = tuple(lam)
    key = (m, dims, lam, p)
    got = _X_MEMO.get(key)
    if got is not None:
        return got
    total = orbit_count(m, dims, lam, p, engine=engine, cap=cap)
    dl = dims[-1]
    for k in range(1, dl + 1):
        refined = dims[:-1] + (k, dl - k)
        total -= count_with_exact_center(m, refined, lam, p, engine=engine, cap=cap)
    if total < 0:
        raise InternalInconsistencyError(
            f"negative exact-centre count at m={m}, dims={dims}, lam={lam}, p={p}"
        )
    _X_MEMO[key] = total
    return total


@dataclass
class CensusRow:
    n: int
    p: int
    count: int
    breakdown: dict = field(default_factory=dict)  # (m, lam) -> count
    engine: str = "typed"


def census(n, p, engine="typed", cap=None):
    """Number of isomorphism classes of order p^n, with the (m, lam) breakdown."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    breakdown = {}
    total = 0
    for m in range(n + 1):
        for lam in partitions(n - m):
            x = count_with_exact_center(m, (m,), lam, p, engine=engine, cap=cap)
            breakdown[(m, lam)] = x
            total += x
    return CensusRow(n=n, p=p, count=total, breakdown=breakdown, engine=engine)


def materialize(m, lam, p, datum):
    """Build the Lie ring described by an extension datum (flagless case).

    The additive group is the set F_p^m x M_lam with carry-twisted addition
    along the lifts of the z component; the bracket reads the y component
    through the quotient.  The construction is verified before returning.
    """
    lam = tuple(lam)
    if m == 0:
        ring = PlainLieRing(p, lam, {})
        return ring
    L = ExtensionLieRing(m, lam, p, datum)
    L.verify()
    return L


def center_exact_representatives(m, lam, p, cap=None):
    """Materialised orbit representatives (flagless shape) with centre = ideal.

    The centre always contains the ideal, so comparing sizes suffices.
    """
    lam = tuple(lam)
    if m == 0:
        return [materialize(0, lam, p, ((), ()))]
    out = []
    ideal_size = p ** sum(lam)
    for rep, _size in orbit_partition(m, (m,), lam, p, cap=cap):
        L = materialize(m, lam, p, rep)
        if len(L.centre()) == ideal_size:
            out.append(L)
    return out
