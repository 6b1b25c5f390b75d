"""ellhom: exact computations with Grothendieck-group classes of
Harish-Chandra modules on the character lattice of a compact Cartan
subgroup, and verification that the elliptic and homological pairings
agree there.
"""

from .characters import (
    InternalConsistencyError,
    freudenthal_character,
    weyl_character,
    weyl_dimension,
)
from .charring import (
    CharElement,
    ch_add,
    ch_conjugate,
    ch_mul,
    ch_scale,
    divide_exact,
    half_denominator,
    torus_integral,
    torus_pairing,
    weyl_act,
    weyl_denominator_full,
)
from .koszul import (
    GradedHomology,
    euler_class,
    euler_class_closed_form,
    koszul_n_homology,
    kostant_homology,
)
from .pairings import (
    PairContext,
    antisym_transport,
    check_antisym_i,
    check_denominator_symmetry,
    compact_context,
    custom_context,
    dual_class,
    elliptic_pairing,
    ext_abelian_graded,
    homological_pairing,
    multiplicity_pairing,
    pairing_unequal_rank,
    split_rank_one_context,
    unequal_rank_context,
)
from .rootsystem import (
    CapExceededError,
    RootSystem,
    UnsupportedTypeError,
    Weight,
    WeylElement,
    WeylSubgroup,
    act,
    build_root_system,
    enumerate_weyl_group,
    parse_type,
    rho_shift,
    subgroup_from_generators,
    trivial_subgroup,
)
from .zoo import (
    Catalog,
    GeometricDatum,
    VirtualModule,
    compact_catalog,
    compact_irreducible,
    dual_standard_class,
    sl2_catalog,
    sl2_presets,
    standard_module_class,
    unequal_rank_catalog,
    unequal_rank_stub,
)

__version__ = "0.1.0"
