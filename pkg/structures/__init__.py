"""
Structure classes on generalized Riemannian manifolds.
Consolidates classification, the skew-torsion corollaries and the NGT theorems
for almost Hermitian, para-Hermitian, contact and paracontact structures.
"""

from .classify import StructureKind, classify, classify_frames, structure_residuals
from .contact import (
    almost_nearly_cosymplectic_residual,
    almost_nearly_cosymplectic_rhs,
    contact_ngt_pipeline,
    contact_ngt_point,
    paracontact_condition_residual,
    paracontact_ngt_pipeline,
    paracontact_ngt_point,
)
from .corollaries import (
    contact_nijenhuis,
    contact_skew_torsion,
    hermitian_skew_torsion,
    killing_residual,
    levi_civita_nabla_xi,
    para_hermitian_skew_torsion,
    paracontact_skew_torsion,
    torsion_from_image,
    total_skew_residual,
    wedge,
)
from .hermitian import (
    EquivalenceReport,
    hermitian_ngt_equivalence,
    hermitian_ngt_point,
    nearly_kahler_parts,
    nearly_kahler_residual,
    para_hermitian_ngt_check,
    para_hermitian_ngt_point,
)
from .results import AggregateResult, ConditionalResult, aggregate

__all__ = [
    # Classification
    "StructureKind",
    "classify",
    "classify_frames",
    "structure_residuals",
    # Results
    "ConditionalResult",
    "AggregateResult",
    "aggregate",
    # Corollaries
    "hermitian_skew_torsion",
    "para_hermitian_skew_torsion",
    "contact_skew_torsion",
    "paracontact_skew_torsion",
    "torsion_from_image",
    "contact_nijenhuis",
    "killing_residual",
    "levi_civita_nabla_xi",
    "total_skew_residual",
    "wedge",
    # Hermitian theorems
    "nearly_kahler_parts",
    "nearly_kahler_residual",
    "hermitian_ngt_point",
    "hermitian_ngt_equivalence",
    "EquivalenceReport",
    "para_hermitian_ngt_point",
    "para_hermitian_ngt_check",
    # Contact theorems
    "almost_nearly_cosymplectic_rhs",
    "almost_nearly_cosymplectic_residual",
    "contact_ngt_point",
    "contact_ngt_pipeline",
    "paracontact_condition_residual",
    "paracontact_ngt_point",
    "paracontact_ngt_pipeline",
]
