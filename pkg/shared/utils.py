"""
Shared utility functions for ngtlab.
Consolidates logging setup, verdict tiers and residual helpers.
"""

import logging
from typing import Optional

import numpy as np

from .config import NGTLAB_LOG_LEVEL
from .models import Tolerances, Verdict


def configure_logging(level: Optional[str] = None) -> None:
    """Configure root logging once for CLI and workflow runs."""
    logging.basicConfig(
        level=getattr(logging, (level or NGTLAB_LOG_LEVEL).upper(), logging.INFO),
        format="%(levelname)s %(name)s: %(message)s",
    )


def max_abs(array) -> float:
    """Max-norm of a residual array; 0 for empty arrays."""
    array = np.asarray(array, dtype=float)
    if array.size == 0:
        return 0.0
    return float(np.max(np.abs(array)))


def verdict_for(residual: float, tolerance: float, reject: float) -> Verdict:
    """Three-tier verdict: pass at or below tolerance, fail at or above reject."""
    if not np.isfinite(residual):
        return Verdict.FAIL
    if residual <= tolerance:
        return Verdict.PASS
    if residual >= reject:
        return Verdict.FAIL
    return Verdict.INDETERMINATE


def passes(residual: float, tolerances: Tolerances) -> bool:
    return verdict_for(residual, tolerances.identity, tolerances.reject) == Verdict.PASS


def default_tolerances(symbolic: bool, identity: Optional[float] = None) -> Tolerances:
    """Tolerances for a manifold, picking the identity tier from its backend."""
    from .config import (
        NGTLAB_FD_TOL,
        NGTLAB_REJECT_TOL,
        NGTLAB_STRUCTURE_TOL,
        NGTLAB_SYMBOLIC_TOL,
    )

    if identity is None:
        identity = NGTLAB_SYMBOLIC_TOL if symbolic else NGTLAB_FD_TOL
    return Tolerances(
        identity=identity,
        structure=NGTLAB_STRUCTURE_TOL if symbolic else identity,
        reject=NGTLAB_REJECT_TOL,
    )
