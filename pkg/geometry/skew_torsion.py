"""
Connections with totally skew-symmetric torsion preserving G = g + F.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from shared.config import NGTLAB_COND_LIMIT, NGTLAB_SYMBOLIC_TOL
from shared.errors import SingularEndomorphismError
from shared.utils import max_abs
from tensor import PointFrame, compose_slots, d_two_form, permute, skew_residual

from .connections import covariant_residuals, levi_civita_nabla_F, skew_torsion_connection
from .nijenhuis import nijenhuis_lowered, nijenhuis_nabla_a_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SkewTorsionResult:
    """Condition residual plus, when it holds, the connection and its checks."""

    condition_residual: float
    tolerance: float
    torsion: Optional[np.ndarray] = None
    gamma: Optional[np.ndarray] = None
    nabla_g: float = float("nan")
    nabla_F: float = float("nan")
    skew: float = float("nan")
    image_of_a: float = float("nan")
    nabla_a_form: float = float("nan")

    @property
    def exists(self) -> bool:
        if self.torsion is None:
            return False
        return max(self.condition_residual, self.nabla_g, self.nabla_F, self.skew) <= self.tolerance


def skew_condition_residual(frame: PointFrame) -> float:
    """N(X,Y,AZ) + N(X,Z,AY) - dF(X,Y,A^2 Z) - dF(X,Z,A^2 Y)."""
    N_AZ = compose_slots(nijenhuis_lowered(frame), {2: frame.A})
    dF_A2Z = compose_slots(d_two_form(frame.dF), {2: frame.A2})
    lhs = N_AZ + permute(N_AZ, "xzy")
    rhs = dF_A2Z + permute(dF_A2Z, "xzy")
    return max_abs(lhs - rhs)


def invert_endomorphism(A: np.ndarray, cond_limit: float = NGTLAB_COND_LIMIT) -> np.ndarray:
    cond = np.linalg.cond(A)
    if not np.isfinite(cond) or cond > cond_limit:
        raise SingularEndomorphismError(
            "A singular - use structure-specific path (contact and paracontact "
            "structures are handled by the structures package)"
        )
    return np.linalg.inv(A)


def skew_torsion_existence(frame: PointFrame, tol: float = NGTLAB_SYMBOLIC_TOL) -> SkewTorsionResult:
    """Decide whether a G-preserving connection with totally skew torsion exists at the point.

    T is solved from T(AX,Y,Z) = 2(nabla^g_X F)(Y,Z) - dF(X,Y,Z) by applying A^-1 to
    the first slot; the first-line relation T(AX,AY,Z) = -N(X,Y,Z) + dF(X,Y,AZ)
    is kept as a cross-check only.
    """
    condition = skew_condition_residual(frame)
    if condition > tol:
        return SkewTorsionResult(condition, tol)
    A_inv = invert_endomorphism(frame.A)
    dF = d_two_form(frame.dF)
    T = compose_slots(2.0 * levi_civita_nabla_F(frame) - dF, {0: A_inv})
    gamma = skew_torsion_connection(T, frame)
    found = covariant_residuals(gamma, frame)
    N = nijenhuis_lowered(frame)
    image = max_abs(
        compose_slots(T, {0: frame.A, 1: frame.A}) + N - compose_slots(dF, {2: frame.A})
    )
    result = SkewTorsionResult(
        condition_residual=condition,
        tolerance=tol,
        torsion=T,
        gamma=gamma,
        nabla_g=found.nabla_g,
        nabla_F=found.nabla_F,
        skew=skew_residual(T),
        image_of_a=image,
        nabla_a_form=max_abs(nijenhuis_nabla_a_form(T, frame) - N),
    )
    if not result.exists:
        logger.info(
            "[SKEW] condition holds but reconstruction fails: nabla g %.2e, nabla F %.2e, skew %.2e",
            result.nabla_g,
            result.nabla_F,
            result.skew,
        )
    return result
