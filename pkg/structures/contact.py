"""
Almost contact and almost paracontact metric structures as generalized metrics.

The skew NGT connection exists on an almost contact metric manifold exactly
when it is almost-nearly cosymplectic, and on an almost paracontact one exactly
when nabla^g A is the dF-expression of the Hermitian case.
"""

import logging
from typing import Iterable

import numpy as np

from geometry import levi_civita, levi_civita_lowered, nabla_A_lowered, nijenhuis_lowered
from ngt import expected_levi_civita_nabla_F, ngt_skew_pipeline
from shared.config import NGTLAB_SYMBOLIC_TOL
from shared.utils import max_abs
from tensor import PointFrame, compose_slots, contract, lie_derivative_two_form, lower, permute

from .corollaries import (
    contact_nijenhuis,
    killing_residual,
    levi_civita_nabla_xi,
    total_skew_residual,
    wedge,
)
from .results import AggregateResult, ConditionalResult, aggregate

logger = logging.getLogger(__name__)


def _eta_deta(frame: PointFrame, deta: np.ndarray, order: str) -> np.ndarray:
    """eta(first slot) * deta(other two) with the slots named by order, e.g. "yzx" for eta(Y) deta(Z,X)."""
    return permute(np.einsum("i,jk->ijk", frame.eta, deta), order)


def almost_nearly_cosymplectic_rhs(frame: PointFrame) -> np.ndarray:
    """-dF(AX,AY,Z)/3 + eta(Z) d eta(Y,AX)/6 - eta(Y) d eta(AZ,X)/2, indexed [X, Y, Z]."""
    A = frame.A
    deta = frame.exterior_deta
    deta_y_ax = np.einsum("k,yx->xyk", frame.eta, deta @ A)
    deta_az_x = np.einsum("y,zx->xyz", frame.eta, A.T @ deta)
    return (
        -compose_slots(frame.exterior_dF, {0: A, 1: A}) / 3.0
        + deta_y_ax / 6.0
        - deta_az_x / 2.0
    )


def almost_nearly_cosymplectic_residual(frame: PointFrame) -> float:
    nA = nabla_A_lowered(levi_civita(frame), frame)
    return max_abs(nA - almost_nearly_cosymplectic_rhs(frame))


def _xi1_identities(frame: PointFrame) -> dict:
    """Identities every point of an almost-nearly cosymplectic manifold satisfies."""
    A, xi = frame.A, frame.xi
    deta = frame.exterior_deta
    dF_xi = frame.exterior_dF @ xi  # dF(X, Y, xi)
    return {
        "deta_from_dF": max_abs(deta - 0.5 * (dF_xi @ A) - 0.5 * (A.T @ dF_xi)),
        "deta_xi": max_abs(deta @ xi),
        "deta_type": max_abs(A.T @ deta - deta @ A),
    }


def contact_ngt_point(frame: PointFrame, tol: float = NGTLAB_SYMBOLIC_TOL) -> ConditionalResult:
    condition = almost_nearly_cosymplectic_residual(frame)
    info = _xi1_identities(frame)
    if condition > tol:
        return ConditionalResult("almost_nearly_cosymplectic", condition, tol, info=info)

    A, eta, xi, g = frame.A, frame.eta, frame.xi, frame.g
    dF = frame.exterior_dF
    deta = frame.exterior_deta
    N = nijenhuis_lowered(frame)
    pipeline = ngt_skew_pipeline(frame, tol)
    checks = dict(pipeline.checks)
    checks["skew_condition"] = pipeline.condition_residual
    checks.update(info)
    if not pipeline.exists:
        return ConditionalResult("almost_nearly_cosymplectic", condition, tol, checks, info)

    gamma = pipeline.gamma
    dF_xi = dF @ xi
    nabla_eta = levi_civita_nabla_xi(frame)
    eta_Ydeta_ZX = _eta_deta(frame, deta, "yzx")
    eta_Zdeta_YX = _eta_deta(frame, deta, "zyx")
    deta_A = deta @ A  # d eta(X, AY)
    torsion_rhs = -0.25 * compose_slots(N, {0: A, 1: A, 2: A}) + (
        _eta_deta(frame, deta_A, "xyz")
        + _eta_deta(frame, deta_A, "yzx")
        + _eta_deta(frame, deta_A, "zxy")
    ) / 3.0
    connection_rhs = (
        levi_civita_lowered(frame)
        - dF / 6.0
        + (_eta_deta(frame, deta, "xyz") + _eta_deta(frame, deta, "yxz")) / 6.0
    )
    nabla_g_rhs = (eta_Ydeta_ZX + eta_Zdeta_YX) / 6.0
    checks.update(
        torsion_nijenhuis=max_abs(pipeline.torsion - torsion_rhs),
        connection=max_abs(lower(gamma, g) - connection_rhs),
        nabla_g_eta=max_abs(pipeline.nabla_g - nabla_g_rhs),
        nabla_F_eta=max_abs(pipeline.nabla_F - (dF - compose_slots(dF, {2: A})) / 3.0 + nabla_g_rhs),
        nabla_eta_dF=max_abs(nabla_eta - (dF_xi @ A) / 3.0 - (A.T @ dF_xi) / 6.0),
        dF_xi=max(max_abs(dF_xi @ A - deta), max_abs(A.T @ dF_xi - deta)),
        nabla_eta_half_deta=max_abs(nabla_eta - 0.5 * deta),
        nijenhuis_xi=max(
            max_abs(N @ xi - deta),
            max_abs(contract(xi, N, 0) - deta),
        ),
        nijenhuis_dF=max_abs(N + (4.0 / 3.0) * compose_slots(dF, {0: A, 1: A, 2: A}) - wedge(deta, eta)),
        dF_eta_deta=max_abs(
            compose_slots(dF, {0: A, 1: A, 2: A})
            + compose_slots(dF, {2: A})
            - _eta_deta(frame, deta, "xyz")
            - _eta_deta(frame, deta, "yzx")
        ),
        levi_civita_nabla_A=max_abs(nabla_A_lowered(levi_civita(frame), frame) - _levi_civita_nabla_a_rhs(frame) / 2.0),
        lie_xi_F=max_abs(
            lie_derivative_two_form(xi, frame.dxi, frame.F, frame.dF) - (A.T @ deta.T)
        ),
        killing=killing_residual(frame),
        nijenhuis_total_skew=total_skew_residual(N),
    )
    if max_abs(deta) <= tol:
        checks["closed_eta_parallel"] = max_abs(nabla_eta)
    if max_abs(contact_nijenhuis(frame, 1.0)) <= tol:
        checks["normal_cosymplectic"] = max(max_abs(deta), max_abs(dF))
    return ConditionalResult(
        "almost_nearly_cosymplectic", condition, tol, checks, info, torsion=pipeline.torsion, gamma=gamma
    )


def _levi_civita_nabla_a_rhs(frame: PointFrame) -> np.ndarray:
    """dF(X,Y,Z) - dF(X,AY,AZ) + N^ac(Y,Z,AX) + [d eta(AY,Z) - d eta(AZ,Y)] eta(X)
    - d eta(X,AY) eta(Z) + d eta(X,AZ) eta(Y)."""
    A = frame.A
    deta = frame.exterior_deta
    dF = frame.exterior_dF
    n_ac = contact_nijenhuis(frame, 1.0)
    deta_AY_Z = A.T @ deta  # d eta(AY, Z) indexed [Y, Z]
    deta_X_AY = deta @ A
    return (
        dF
        - compose_slots(dF, {1: A, 2: A})
        + permute(compose_slots(n_ac, {2: A}), "yzx")
        + np.einsum("x,yz->xyz", frame.eta, deta_AY_Z - deta_AY_Z.T)
        - np.einsum("xy,z->xyz", deta_X_AY, frame.eta)
        + np.einsum("xz,y->xyz", deta_X_AY, frame.eta)
    )


def contact_ngt_pipeline(frames: Iterable[PointFrame], tol: float = NGTLAB_SYMBOLIC_TOL) -> AggregateResult:
    return aggregate(contact_ngt_point(frame, tol) for frame in frames)


def paracontact_condition_residual(frame: PointFrame) -> float:
    nA = nabla_A_lowered(levi_civita(frame), frame)
    return max_abs(nA - expected_levi_civita_nabla_F(frame))


def paracontact_ngt_point(frame: PointFrame, tol: float = NGTLAB_SYMBOLIC_TOL) -> ConditionalResult:
    condition = paracontact_condition_residual(frame)
    if condition > tol:
        return ConditionalResult("paracontact_ngt", condition, tol)

    A, eta, xi = frame.A, frame.eta, frame.xi
    dF = frame.exterior_dF
    deta = frame.exterior_deta
    N = nijenhuis_lowered(frame)
    dF_xi = dF @ xi
    nabla_eta = levi_civita_nabla_xi(frame)
    pipeline = ngt_skew_pipeline(frame, tol)
    checks = dict(pipeline.checks)
    checks["skew_condition"] = pipeline.condition_residual

    def c(endos):
        return compose_slots(dF, endos)

    eta_terms = (
        -_eta_deta(frame, deta, "xyz")
        - _eta_deta(frame, deta, "yzx")
        + _eta_deta(frame, deta, "zxy")
    )
    skew_rhs = (c({2: A}) + c({0: A}) + c({1: A}) + c({0: A, 1: A, 2: A})) / 3.0 + eta_terms
    deta_AY_Z = A.T @ deta
    # N(Y,Z,AX) stored as [X, Y, Z]
    n_yz_ax = permute(compose_slots(N, {2: A}), "yzx")
    zam_rhs = (
        (dF + c({1: A, 2: A}) + c({0: A, 2: A}) + c({0: A, 1: A})) / 3.0
        + 2.0 * np.einsum("x,yz->xyz", eta, deta_AY_Z)
        + np.einsum("yx,z->xyz", deta_AY_Z, eta)
        - np.einsum("zx,y->xyz", deta_AY_Z, eta)
    )
    n_aaa_rhs = (c({0: A, 1: A}) + c({1: A, 2: A}) + c({0: A, 2: A}) + dF) / 3.0 + 2.0 * (
        np.einsum("z,xy->xyz", eta, deta_AY_Z)
        + np.einsum("y,zx->xyz", eta, deta_AY_Z)
        + np.einsum("x,yz->xyz", eta, deta_AY_Z)
    )
    n_aaa = compose_slots(N, {0: A, 1: A, 2: A})
    checks.update(
        nabla_eta_dF=max_abs(nabla_eta + (dF_xi @ A) / 3.0 - (A.T @ dF_xi) / 6.0),
        deta_from_dF=max_abs(deta + (A.T @ dF_xi) / 6.0 + (dF_xi @ A) / 6.0),
        deta_xi=max_abs(deta @ xi),
        deta_type=max_abs(A.T @ deta - deta @ A),
        skew_condition_paracontact=max_abs(N - skew_rhs),
        nijenhuis_image=max_abs(n_yz_ax - zam_rhs),
        nijenhuis_xi=max_abs(N @ xi + deta),
        nijenhuis_aaa=max_abs(n_aaa - n_aaa_rhs),
        nijenhuis_aaa_skew=total_skew_residual(n_aaa),
    )
    return ConditionalResult(
        "paracontact_ngt", condition, tol, checks, torsion=pipeline.torsion, gamma=pipeline.gamma
    )


def paracontact_ngt_pipeline(frames: Iterable[PointFrame], tol: float = NGTLAB_SYMBOLIC_TOL) -> AggregateResult:
    return aggregate(paracontact_ngt_point(frame, tol) for frame in frames)
