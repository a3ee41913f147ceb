"""Exact small quantum cohomology of flag varieties in the Schubert basis."""

from .compare import (
    CheckResult,
    ComparisonData,
    ConsistencyReport,
    anticanonical_pairing,
    check_comparison_consistency,
    class_lift,
    class_pushforward,
    classical_parabolic_invariant,
    comparison_data,
    parabolic_gw_invariant,
    parabolic_quantum_product,
    parabolic_star,
)
from .degrees import (
    AlcoveSpec,
    CurveClass,
    derived_parabolic,
    enumerate_alcove_lifts,
    flag_dimension,
    hom_dimension,
    is_effective,
    is_generic_levi_semistable,
    peterson_lift,
    push_degree,
)
from .quantum import (
    BOREL,
    QClass,
    chevalley_multiply,
    classical_product,
    format_qclass,
    gw_invariant,
    quantum_product,
    star,
)
from .root_system import (
    CartanType,
    ParabolicSubset,
    RootSystem,
    build_root_system,
    pairing,
    reflect_coweight,
)
from .weyl import (
    DEFAULT_MAX_WEYL_ORDER,
    EnumerationBoundError,
    WeylElement,
    enumerate_min_reps,
    enumerate_subgroup,
    format_word,
    from_word,
    identity,
    longest_element,
    min_coset_rep,
    parse_word,
    reflection,
    simple_reflection,
)

__all__ = [
    "AlcoveSpec",
    "BOREL",
    "CartanType",
    "CheckResult",
    "ComparisonData",
    "ConsistencyReport",
    "CurveClass",
    "DEFAULT_MAX_WEYL_ORDER",
    "EnumerationBoundError",
    "ParabolicSubset",
    "QClass",
    "RootSystem",
    "WeylElement",
    "anticanonical_pairing",
    "build_root_system",
    "check_comparison_consistency",
    "chevalley_multiply",
    "class_lift",
    "class_pushforward",
    "classical_parabolic_invariant",
    "classical_product",
    "comparison_data",
    "derived_parabolic",
    "enumerate_alcove_lifts",
    "enumerate_min_reps",
    "enumerate_subgroup",
    "flag_dimension",
    "format_qclass",
    "format_word",
    "from_word",
    "gw_invariant",
    "hom_dimension",
    "identity",
    "is_effective",
    "is_generic_levi_semistable",
    "longest_element",
    "min_coset_rep",
    "pairing",
    "parabolic_gw_invariant",
    "parabolic_quantum_product",
    "parabolic_star",
    "parse_word",
    "peterson_lift",
    "push_degree",
    "quantum_product",
    "reflect_coweight",
    "reflection",
    "simple_reflection",
    "star",
]
