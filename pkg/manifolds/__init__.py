"""
Builtin manifolds and random generators for ngtlab.
Consolidates the named catalog, the octonionic six-sphere and seeded property-test inputs.
"""

from .catalog import (
    BUILTINS,
    Builtin,
    builtin,
    builtin_names,
    contact_r3,
    deformed_hermitian_r4,
    flat_kahler,
    flat_kahler_times_line,
    flat_para_kahler,
    nk_times_line,
    para_product_line,
    s6_nearly_kahler,
)
from .octonions import (
    EPSILON,
    FANO_TRIPLES,
    cross,
    cross_matrix,
    sphere_endomorphism,
    sphere_endomorphism_jet,
    sphere_point,
)
from .random_fields import (
    random_chart,
    random_expression,
    random_generalized_metric,
    random_polynomial,
    random_skew_first_pair,
    random_symmetric_last_pair,
    random_totally_skew,
)

__all__ = [
    # Catalog
    "BUILTINS",
    "Builtin",
    "builtin",
    "builtin_names",
    "flat_kahler",
    "flat_para_kahler",
    "flat_kahler_times_line",
    "s6_nearly_kahler",
    "nk_times_line",
    "contact_r3",
    "deformed_hermitian_r4",
    "para_product_line",
    # Octonions
    "FANO_TRIPLES",
    "EPSILON",
    "cross",
    "cross_matrix",
    "sphere_point",
    "sphere_endomorphism",
    "sphere_endomorphism_jet",
    # Random inputs
    "random_chart",
    "random_polynomial",
    "random_expression",
    "random_generalized_metric",
    "random_skew_first_pair",
    "random_symmetric_last_pair",
    "random_totally_skew",
]
