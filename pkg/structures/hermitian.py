"""
Almost Hermitian and almost para-Hermitian structures as generalized metrics.

An almost Hermitian G = g + F admits a skew-torsion NGT connection exactly when
it is nearly Kaehler; an almost para-Hermitian one exactly when N is totally skew.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable

from geometry import levi_civita, levi_civita_nabla_F, nabla_A, nijenhuis_lowered
from ngt import ngt_skew_condition_residual, ngt_skew_pipeline
from shared.config import NGTLAB_REJECT_TOL, NGTLAB_SYMBOLIC_TOL
from shared.models import Verdict
from shared.utils import max_abs, verdict_for
from tensor import PointFrame, compose_slots, permute

from .corollaries import total_skew_residual
from .results import AggregateResult, ConditionalResult, aggregate

logger = logging.getLogger(__name__)


def nearly_kahler_parts(frame: PointFrame):
    """max_X |(nabla^g_X A)X| over basis vectors, and the symmetric part of nabla^g F in its first two slots."""
    nA = nabla_A(levi_civita(frame), frame)
    basis = max(max_abs(nA[m, :, m]) for m in range(frame.dim))
    nF = levi_civita_nabla_F(frame)
    return basis, max_abs(nF + permute(nF, "yxz"))


def nearly_kahler_residual(frame: PointFrame) -> float:
    return max(nearly_kahler_parts(frame))


def _pipeline_checks(frame: PointFrame, tol: float):
    pipeline = ngt_skew_pipeline(frame, tol)
    return pipeline, dict(pipeline.checks)


def hermitian_ngt_point(frame: PointFrame, tol: float = NGTLAB_SYMBOLIC_TOL) -> ConditionalResult:
    """Skew NGT condition at one point, with the nearly Kaehler residual alongside."""
    condition = ngt_skew_condition_residual(frame)
    info = {"nearly_kahler": nearly_kahler_residual(frame)}
    if condition > tol:
        return ConditionalResult("skew_condition", condition, tol, info=info)

    A = frame.A
    dF = frame.exterior_dF
    N = nijenhuis_lowered(frame)
    dF_z = compose_slots(dF, {2: A})
    dF_y = compose_slots(dF, {1: A})
    dF_x = compose_slots(dF, {0: A})
    dF_xyz = compose_slots(dF, {0: A, 1: A, 2: A})
    pipeline, checks = _pipeline_checks(frame, tol)
    checks.update(
        dF_type=max(max_abs(dF_z - dF_y), max_abs(dF_y - dF_x), max_abs(dF_x + dF_xyz)),
        nijenhuis_dF=max_abs(N - (4.0 / 3.0) * dF_z),
        torsion_nijenhuis=max_abs(pipeline.torsion - 0.25 * compose_slots(N, {2: A})),
        nabla_g_zero=max_abs(pipeline.nabla_g),
        nabla_F_closed=max_abs(pipeline.nabla_F - (dF - dF_z) / 3.0),
    )
    return ConditionalResult(
        "skew_condition", condition, tol, checks, info, torsion=pipeline.torsion, gamma=pipeline.gamma
    )


@dataclass(frozen=True)
class EquivalenceReport:
    """Both sides of the nearly Kaehler biconditional over a set of points."""

    skew_condition: AggregateResult
    nearly_kahler: float
    one_sided_points: int
    points: int

    @property
    def checks(self) -> Dict[str, float]:
        return self.skew_condition.checks

    @property
    def consistent(self) -> bool:
        return self.one_sided_points == 0


def hermitian_ngt_equivalence(
    frames: Iterable[PointFrame],
    tol: float = NGTLAB_SYMBOLIC_TOL,
    reject: float = NGTLAB_REJECT_TOL,
) -> EquivalenceReport:
    """Run the biconditional at every point; a point passing exactly one side is one-sided."""
    results = [hermitian_ngt_point(frame, tol) for frame in frames]
    one_sided = 0
    for result in results:
        skew = verdict_for(result.condition_residual, tol, reject)
        nk = verdict_for(result.info["nearly_kahler"], tol, reject)
        if (skew == Verdict.PASS) != (nk == Verdict.PASS):
            one_sided += 1
    summary = aggregate(results)
    if one_sided:
        logger.warning("[SUITE] nearly Kaehler biconditional is one-sided at %d point(s)", one_sided)
    return EquivalenceReport(summary, summary.info.get("nearly_kahler", 0.0), one_sided, len(results))


def para_hermitian_ngt_point(frame: PointFrame, tol: float = NGTLAB_SYMBOLIC_TOL) -> ConditionalResult:
    """N totally skew, then the skew NGT pipeline; nearly para-Kaehler points also get nabla g = 0."""
    N = nijenhuis_lowered(frame)
    condition = total_skew_residual(N)
    nk = nearly_kahler_residual(frame)
    info = {"nearly_para_kahler": nk}
    if condition > tol:
        return ConditionalResult("nijenhuis_total_skew", condition, tol, info=info)
    pipeline, checks = _pipeline_checks(frame, tol)
    checks["skew_condition"] = pipeline.condition_residual
    if nk <= tol:
        dF_z = compose_slots(frame.exterior_dF, {2: frame.A})
        checks["nabla_g_zero"] = max_abs(pipeline.nabla_g) if pipeline.exists else float("inf")
        checks["nijenhuis_dF"] = max_abs(N - (4.0 / 3.0) * dF_z)
    return ConditionalResult(
        "nijenhuis_total_skew", condition, tol, checks, info, torsion=pipeline.torsion, gamma=pipeline.gamma
    )


def para_hermitian_ngt_check(frames: Iterable[PointFrame], tol: float = NGTLAB_SYMBOLIC_TOL) -> AggregateResult:
    return aggregate(para_hermitian_ngt_point(frame, tol) for frame in frames)
