"""Dual-side combinatorics of the local correspondence for classical groups.

Unipotent-class classification, u-symbols and their defects, elimination,
cuspidal data for Sp/SO/O and products, discrete enhanced parameters with
their cuspidal supports, and the Weyl/Hecke parameter data of inertial
triples.  Everything is exact integer and rational arithmetic.
"""

from .orbits import (
    ComponentGroupDescriptor,
    CuspidalPair,
    Family,
    GroupKind,
    Partition,
    Relation,
    SignCharacter,
    component_group,
    cuspidal_pair,
    is_distinguished,
    orbit_count,
    validate_partition,
)
from .symbols import (
    IntervalStructure,
    SymbolKind,
    USymbol,
    defect,
    defect_formula,
    distinguished_symbol,
    interval_structure,
    symbol_from_character,
)
from .springer import (
    CuspidalDatum,
    OSpringerDatum,
    ProductFactor,
    ProductSpringerDatum,
    d_from_normal_form,
    eliminate,
    eliminate_once,
    springer_datum,
    springer_o,
    springer_product,
)
from .lparams import (
    DiscreteParameter,
    ExponentMultiset,
    IrrLabel,
    ParameterCharacter,
    SelfDualType,
    agroup,
    block_group_type,
    infinitesimal_character,
    is_cuspidal,
    reducibility_point,
    sgroup_factors,
    validate_parameter,
)
from .cuspsupport import (
    CuspidalSupport,
    check_support,
    ec_multiset,
    support,
    support_via_psi,
)
from .bernstein import (
    GLFactor,
    HeckeParams,
    InertialTriple,
    WeylDescriptor,
    hecke_parameters,
    torus_dim,
    weyl_descriptor,
)
from .census import (
    bipartition_count,
    enumerate_parameters,
    springer_count_identity,
    unipotent_census,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
