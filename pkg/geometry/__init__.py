"""
Connections with torsion on generalized Riemannian manifolds.
Consolidates Levi-Civita, torsion-prescribed, metric, skew-torsion and Eisenhart connections.
"""

from .connections import (
    CovariantResiduals,
    MetricCompatResult,
    connection_from_lowered,
    connection_from_torsion_and_nabla_g,
    covariant_residuals,
    cyclic_dF_identity_residual,
    cyclic_sum,
    cyclic_torsion_terms,
    eisenhart_connection,
    induced_nabla_F,
    levi_civita,
    levi_civita_lowered,
    levi_civita_nabla_F,
    lowered_connection,
    metric_connection_compat,
    metric_connection_compat_residual,
    nabla_A,
    nabla_A_lowered,
    nabla_F,
    nabla_g,
    skew_torsion_connection,
)
from .nijenhuis import (
    eisenhart_nijenhuis_residual,
    eisenhart_nijenhuis_rhs,
    nijenhuis,
    nijenhuis_lowered,
    nijenhuis_nabla_a_form,
    nijenhuis_via_nabla_a,
)
from .skew_torsion import (
    SkewTorsionResult,
    invert_endomorphism,
    skew_condition_residual,
    skew_torsion_existence,
)

__all__ = [
    # Connections
    "levi_civita",
    "levi_civita_lowered",
    "levi_civita_nabla_F",
    "lowered_connection",
    "connection_from_lowered",
    "connection_from_torsion_and_nabla_g",
    "induced_nabla_F",
    "cyclic_dF_identity_residual",
    "cyclic_sum",
    "cyclic_torsion_terms",
    "metric_connection_compat",
    "metric_connection_compat_residual",
    "MetricCompatResult",
    "skew_torsion_connection",
    "eisenhart_connection",
    "nabla_g",
    "nabla_F",
    "nabla_A",
    "nabla_A_lowered",
    "covariant_residuals",
    "CovariantResiduals",
    # Nijenhuis
    "nijenhuis",
    "nijenhuis_lowered",
    "nijenhuis_via_nabla_a",
    "nijenhuis_nabla_a_form",
    "eisenhart_nijenhuis_rhs",
    "eisenhart_nijenhuis_residual",
    # Skew torsion
    "skew_torsion_existence",
    "skew_condition_residual",
    "invert_endomorphism",
    "SkewTorsionResult",
]
