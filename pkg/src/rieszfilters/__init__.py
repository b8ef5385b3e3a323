"""Decidable filter convergence on locally solid vector lattices over Q^n."""

from .lattice import (
    DimensionMismatch,
    Rational,
    RationalVector,
    as_rational,
    format_rational,
    inf,
    is_disjoint,
    leq,
    neg,
    pos,
    sup,
)
from .topology import (
    CoordinateAbs,
    NeighborhoodSpec,
    Pseudonorm,
    PseudonormFamily,
    SemanticsMode,
    SpaceSpec,
    WeightedL1,
    WeightedSup,
    audit_base_axioms,
    audit_pseudonorm_axioms,
    evaluate,
    is_solid_spec,
    nbhd_contains,
    nbhd_contains_translated,
)
from .finite import (
    DirectednessError,
    FiniteCarrier,
    FiniteDirectedSet,
    FiniteMap,
    FiniteNet,
    check_continuity_finite,
    enumerate_restricted_neighborhoods,
    minimal_restricted_neighborhood,
    net_cluster_finite,
    net_converges_finite,
)
from .filters import (
    ConstructionError,
    FilterBase,
    PrincipalFilter,
    all_principal_filters,
    associated_filter_finite,
    cluster_finite,
    converges,
    converges_finite,
    finer_filter_witness,
    generate,
    is_cluster_point,
    is_subfilter,
    join_filter,
    meet_filter,
    neighborhood_filter,
    principal_reduce,
    pushforward,
    validate_base,
)
from .sequences import (
    EventualVerdict,
    Poly,
    PolySequence,
    SequenceTailFilter,
    associated_filter_seq,
    cluster_point_seq,
    eventual_sign,
    eventually_in_nbhd,
    filter_converges_seq,
    seq_converges,
)
from .verdict import Status, Verdict

__version__ = "0.1.0"
