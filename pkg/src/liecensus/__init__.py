"""liecensus: exact census of class-2 Lie rings with central Frattini ideal.

Per prime p and order exponent n the package counts isomorphism classes of
finite Lie rings L of order p^n with pL + [L, L] contained in the centre,
by exact Burnside counting over conjugacy-class data, checks the counts
against a brute-force oracle, and fits the results to polynomial-on-
residue-class formulas.  For odd p the counts equal the number of groups
of order p^n whose Frattini subgroup is central.
"""

__version__ = "0.1.0"

from .caps import InternalInconsistencyError, RefusalError, get_cap
from .census import census, count_with_exact_center, materialize
from .dvr import tser, zmod
from .extension import ext_by_dual_tensor, ext_by_resolution, ext_order
from .fields import GF, irreducibles, num_irreducibles
from .gltypes import (
    class_count_of_type,
    class_size,
    flag_stab_intersection,
    induced_pair_class_intersection,
    realisation_count,
    type_of_tuple,
    type_projection,
)
from .lie import frattini_central_check, lazard_group
from .linalg import gl_iter, gl_order, kernel_dim
from .modules import (
    aut_order,
    aut_order_value,
    aut_polynomial,
    automorphisms,
    chain_count,
    hall_number,
    hall_polynomial,
    partitions,
)
from .oracle import enumerate_lie_rings
from .orbits import orbit_count, orbit_count_naive, orbit_count_typed
from .porcfit import PorcFormula, PorcRejection, porc_fit

__all__ = [
    "GF",
    "InternalInconsistencyError",
    "PorcFormula",
    "PorcRejection",
    "RefusalError",
    "aut_order",
    "aut_order_value",
    "aut_polynomial",
    "automorphisms",
    "census",
    "chain_count",
    "class_count_of_type",
    "class_size",
    "count_with_exact_center",
    "enumerate_lie_rings",
    "ext_by_dual_tensor",
    "ext_by_resolution",
    "ext_order",
    "flag_stab_intersection",
    "frattini_central_check",
    "get_cap",
    "gl_iter",
    "gl_order",
    "hall_number",
    "hall_polynomial",
    "induced_pair_class_intersection",
    "irreducibles",
    "kernel_dim",
    "lazard_group",
    "materialize",
    "num_irreducibles",
    "orbit_count",
    "orbit_count_naive",
    "orbit_count_typed",
    "partitions",
    "porc_fit",
    "realisation_count",
    "type_of_tuple",
    "type_projection",
    "tser",
    "zmod",
]
