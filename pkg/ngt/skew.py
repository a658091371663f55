"""
NGT connections with totally skew-symmetric torsion.

Such a connection exists exactly when N is the dF-expression checked by
ngt_skew_condition_residual; it is then unique, with torsion -dF/3.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from geometry import (
    connection_from_lowered,
    levi_civita,
    levi_civita_lowered,
    levi_civita_nabla_F,
    nabla_A_lowered,
    nabla_F,
    nabla_g,
    nijenhuis_lowered,
)
from shared.config import NGTLAB_SYMBOLIC_TOL
from shared.utils import max_abs
from tensor import PointFrame, compose_slots, permute, torsion

from .metricity import einstein_metricity_residual

logger = logging.getLogger(__name__)


def skew_condition_rhs(frame: PointFrame) -> np.ndarray:
    """The dF side of the existence condition, term by term."""
    A, A2 = frame.A, frame.A2
    dF = frame.exterior_dF

    def c(endos):
        return compose_slots(dF, endos)

    return (
        (2.0 / 3.0) * c({2: A})
        + (1.0 / 3.0) * (c({0: A}) + c({1: A}) + c({0: A, 1: A, 2: A}))
        - (1.0 / 6.0) * (c({0: A2, 2: A}) + c({0: A2, 1: A}) + c({1: A2, 2: A}) - c({1: A, 2: A2}))
        - (1.0 / 6.0) * (c({0: A, 1: A2}) - c({0: A, 2: A2}))
    )


def ngt_skew_condition_residual(frame: PointFrame) -> float:
    return max_abs(nijenhuis_lowered(frame) - skew_condition_rhs(frame))


def ngt_torsion(frame: PointFrame) -> np.ndarray:
    return -frame.exterior_dF / 3.0


def ngt_connection(frame: PointFrame) -> np.ndarray:
    """g(nabla_X Y, Z) = g(nabla^g_X Y, Z) - dF(X,Y,Z)/6 - dF(X,AY,Z)/6 + dF(AX,Y,Z)/6."""
    dF = frame.exterior_dF
    lowered = levi_civita_lowered(frame) + (
        -dF - compose_slots(dF, {1: frame.A}) + compose_slots(dF, {0: frame.A})
    ) / 6.0
    return connection_from_lowered(lowered, frame)


def expected_nabla_g(frame: PointFrame) -> np.ndarray:
    dF = frame.exterior_dF
    return -(compose_slots(dF, {2: frame.A}) - compose_slots(dF, {1: frame.A})) / 6.0


def expected_nabla_F(frame: PointFrame) -> np.ndarray:
    dF = frame.exterior_dF
    return (2.0 * dF - compose_slots(dF, {2: frame.A}) - compose_slots(dF, {1: frame.A})) / 6.0


def expected_nabla_G(frame: PointFrame) -> np.ndarray:
    dF = frame.exterior_dF
    return (dF - compose_slots(dF, {2: frame.A})) / 3.0


def expected_levi_civita_nabla_F(frame: PointFrame) -> np.ndarray:
    """(nabla^g_X F)(Y,Z) = g((nabla^g_X A)Y,Z) in terms of dF alone."""
    A = frame.A
    dF = frame.exterior_dF
    return (
        (dF + compose_slots(dF, {1: A, 2: A})) / 3.0
        - (compose_slots(dF, {0: A, 2: A}) + compose_slots(dF, {0: A, 1: A})) / 6.0
    )


def nabla_F_from_levi_civita(lc_nabla_F: np.ndarray, frame: PointFrame) -> np.ndarray:
    """nabla F of the skew NGT connection expressed through nabla^g F."""
    A = frame.A
    dF = frame.exterior_dF
    dF_2 = compose_slots(dF, {2: A})
    dF_12 = compose_slots(dF, {1: A, 2: A})
    return (
        lc_nabla_F
        - (dF_2 + permute(dF_2, "zxy")) / 6.0
        - (2.0 * dF_12 + permute(dF_12, "zyx") + permute(dF_12, "yxz")) / 6.0
    )


@dataclass(frozen=True)
class NgtSkewResult:
    """Existence condition and, when it holds, the NGT connection with its checks."""

    condition_residual: float
    tolerance: float
    torsion: Optional[np.ndarray] = None
    gamma: Optional[np.ndarray] = None
    nabla_g: Optional[np.ndarray] = None
    nabla_F: Optional[np.ndarray] = None
    lc_nabla_F: Optional[np.ndarray] = None
    checks: Dict[str, float] = field(default_factory=dict)

    @property
    def exists(self) -> bool:
        return self.condition_residual <= self.tolerance

    @property
    def verified(self) -> bool:
        return self.exists and all(value <= self.tolerance for value in self.checks.values())


def ngt_skew_pipeline(frame: PointFrame, tol: float = NGTLAB_SYMBOLIC_TOL) -> NgtSkewResult:
    """Build the skew-torsion NGT connection at a point and verify its properties."""
    condition = ngt_skew_condition_residual(frame)
    if condition > tol:
        logger.debug("[SKEW] existence condition fails with residual %.3e", condition)
        return NgtSkewResult(condition, tol)

    T = ngt_torsion(frame)
    gamma = ngt_connection(frame)
    ng = nabla_g(gamma, frame)
    nf = nabla_F(gamma, frame)
    lc_nf = levi_civita_nabla_F(frame)
    _, found_T = torsion(gamma, frame.g)
    skew0_F = expected_nabla_F(frame)

    checks = {
        "torsion": max_abs(found_T - T),
        "metricity": einstein_metricity_residual(gamma, frame),
        "nabla_g": max_abs(ng - expected_nabla_g(frame)),
        "nabla_F": max_abs(nf - skew0_F),
        "nabla_G": max_abs(ng + nf - expected_nabla_G(frame)),
        "levi_civita_nabla_F": max_abs(lc_nf - expected_levi_civita_nabla_F(frame)),
        "levi_civita_nabla_A": max_abs(nabla_A_lowered(levi_civita(frame), frame) - lc_nf),
        "nabla_F_via_levi_civita": max_abs(nf - nabla_F_from_levi_civita(lc_nf, frame)),
        "substitution": max_abs(nabla_F_from_levi_civita(expected_levi_civita_nabla_F(frame), frame) - skew0_F),
    }
    return NgtSkewResult(
        condition_residual=condition,
        tolerance=tol,
        torsion=T,
        gamma=gamma,
        nabla_g=ng,
        nabla_F=nf,
        lc_nabla_F=lc_nf,
        checks=checks,
    )
