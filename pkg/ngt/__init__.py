"""
Einstein metricity (NGT) machinery for ngtlab.
Consolidates the metricity residual, the prescribed-torsion decomposition chain
and the skew-torsion NGT connection.
"""

from .decomposition import (
    AGREE,
    ERRATUM,
    ClosedFormGuard,
    DecompositionResult,
    admissible_torsion,
    closed_form_guard,
    cyclic_torsion_residual,
    decomposition_connection,
    decomposition_nabla_a,
    decomposition_nabla_F,
    decomposition_nabla_g,
    ngt_general_decomposition,
    nijenhuis_by_substitution,
    nijenhuis_closed_form,
)
from .metricity import (
    einstein_metricity_array,
    einstein_metricity_coordinate,
    einstein_metricity_residual,
)
from .skew import (
    NgtSkewResult,
    expected_levi_civita_nabla_F,
    expected_nabla_F,
    expected_nabla_G,
    expected_nabla_g,
    nabla_F_from_levi_civita,
    ngt_connection,
    ngt_skew_condition_residual,
    ngt_skew_pipeline,
    ngt_torsion,
    skew_condition_rhs,
)

__all__ = [
    # Metricity
    "einstein_metricity_array",
    "einstein_metricity_coordinate",
    "einstein_metricity_residual",
    # Decomposition
    "admissible_torsion",
    "cyclic_torsion_residual",
    "decomposition_nabla_g",
    "decomposition_nabla_F",
    "decomposition_connection",
    "decomposition_nabla_a",
    "nijenhuis_by_substitution",
    "nijenhuis_closed_form",
    "closed_form_guard",
    "ngt_general_decomposition",
    "ClosedFormGuard",
    "DecompositionResult",
    "AGREE",
    "ERRATUM",
    # Skew torsion
    "skew_condition_rhs",
    "ngt_skew_condition_residual",
    "ngt_torsion",
    "ngt_connection",
    "expected_nabla_g",
    "expected_nabla_F",
    "expected_nabla_G",
    "expected_levi_civita_nabla_F",
    "nabla_F_from_levi_civita",
    "ngt_skew_pipeline",
    "NgtSkewResult",
]
