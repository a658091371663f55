"""
Detection of the compatible structure carried by (g, A[, eta, xi]).
"""

import logging
from enum import Enum
from typing import Dict, Iterable, List

import numpy as np

from shared.config import NGTLAB_STRUCTURE_TOL
from shared.errors import StructureError
from shared.utils import max_abs
from tensor import GeneralizedMetric, PointFrame

logger = logging.getLogger(__name__)


class StructureKind(str, Enum):
    """Structure classes, in the order classify tries them."""

    ALMOST_HERMITIAN = "almost-hermitian"
    ALMOST_PARA_HERMITIAN = "almost-para-hermitian"
    ALMOST_CONTACT = "almost-contact"
    ALMOST_PARA_CONTACT = "almost-paracontact"
    GENERIC = "generic"

    @property
    def needs_contact(self) -> bool:
        return self in (StructureKind.ALMOST_CONTACT, StructureKind.ALMOST_PARA_CONTACT)


def _pairing_residuals(frame: PointFrame) -> List[float]:
    g, A, eta, xi = frame.g, frame.A, frame.eta, frame.xi
    return [
        abs(float(eta @ xi) - 1.0),
        max_abs(g @ xi - eta),
        max_abs(A @ xi),
        max_abs(xi @ frame.F),
    ]


def structure_residuals(frame: PointFrame) -> Dict[StructureKind, float]:
    """Max invariant violation of each structure class at one point."""
    g, A = frame.g, frame.A
    identity = np.eye(frame.dim)
    A2 = frame.A2
    pulled = A.T @ g @ A
    residuals = {
        StructureKind.ALMOST_HERMITIAN: max(max_abs(A2 + identity), max_abs(pulled - g)),
        StructureKind.ALMOST_PARA_HERMITIAN: max(max_abs(A2 - identity), max_abs(pulled + g)),
    }
    if frame.has_contact:
        eta_xi = np.outer(frame.xi, frame.eta)
        eta_eta = np.outer(frame.eta, frame.eta)
        pairing = _pairing_residuals(frame)
        residuals[StructureKind.ALMOST_CONTACT] = max(
            [max_abs(A2 + identity - eta_xi), max_abs(pulled - g + eta_eta)] + pairing
        )
        residuals[StructureKind.ALMOST_PARA_CONTACT] = max(
            [max_abs(A2 - identity + eta_xi), max_abs(pulled + g - eta_eta)] + pairing
        )
    return residuals


def classify_frames(frames: Iterable[PointFrame], tol: float = NGTLAB_STRUCTURE_TOL) -> StructureKind:
    """First structure kind whose invariants hold at every frame; generic otherwise."""
    frames = list(frames)
    if not frames:
        return StructureKind.GENERIC
    worst: Dict[StructureKind, float] = {}
    for frame in frames:
        if frame.has_contact:
            pairing = abs(float(frame.eta @ frame.xi) - 1.0)
            if pairing > tol:
                raise StructureError(
                    f"eta(xi) = {float(frame.eta @ frame.xi):.6g} at {frame.point.tolist()}, expected 1"
                )
        for kind, residual in structure_residuals(frame).items():
            worst[kind] = max(worst.get(kind, 0.0), residual)
    for kind in StructureKind:
        if kind in worst and worst[kind] <= tol:
            logger.info("[CLASSIFY] %s (max invariant residual %.2e)", kind.value, worst[kind])
            return kind
    logger.info("[CLASSIFY] generic; closest invariants %s", {k.value: f"{v:.2e}" for k, v in worst.items()})
    return StructureKind.GENERIC


def classify(metric: GeneralizedMetric, points, tol: float = NGTLAB_STRUCTURE_TOL) -> StructureKind:
    return classify_frames((metric.frame(p) for p in points), tol)
