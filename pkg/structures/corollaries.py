"""
G-preserving connections with totally skew torsion on the four structure classes.

Each constructor reports its existence residual and, when it vanishes, the
torsion, the connection g(nabla_X Y, Z) = g(nabla^g_X Y, Z) + T(X,Y,Z)/2 and
the residuals of the parallel tensors.
"""

import logging

import numpy as np

from geometry import covariant_residuals, levi_civita, nijenhuis_lowered, skew_torsion_connection
from shared.config import NGTLAB_SYMBOLIC_TOL
from shared.utils import max_abs
from tensor import (
    PointFrame,
    compose_slots,
    contract,
    covariant_derivative,
    lie_derivative_metric,
    permute,
    skew_residual,
)

from .results import ConditionalResult

logger = logging.getLogger(__name__)


def total_skew_residual(t: np.ndarray) -> float:
    """Deviation from t(X,Y,Z) = -t(X,Z,Y); enough for tensors already skew in X, Y."""
    return max_abs(t + permute(t, "xzy"))


def wedge(two_form: np.ndarray, one_form: np.ndarray) -> np.ndarray:
    """(b ^ a)(X,Y,Z) = b(X,Y)a(Z) + b(Y,Z)a(X) + b(Z,X)a(Y)."""
    t = np.einsum("ij,k->ijk", two_form, one_form)
    return t + permute(t, "yzx") + permute(t, "zxy")


def contact_nijenhuis(frame: PointFrame, sign: float = 1.0) -> np.ndarray:
    """N + sign * (d eta (x) eta): the almost contact (+1) or paracontact (-1) Nijenhuis tensor."""
    return nijenhuis_lowered(frame) + sign * np.einsum("ij,k->ijk", frame.exterior_deta, frame.eta)


def levi_civita_nabla_xi(frame: PointFrame) -> np.ndarray:
    """g(nabla^g_X xi, Y) indexed [X, Y]."""
    nxi = covariant_derivative(levi_civita(frame), frame.xi, frame.dxi, (1, 0))
    return nxi @ frame.g


def killing_residual(frame: PointFrame) -> float:
    return max_abs(lie_derivative_metric(levi_civita_nabla_xi(frame)))


def _parallel_checks(T: np.ndarray, frame: PointFrame, checks: dict) -> np.ndarray:
    gamma = skew_torsion_connection(T, frame)
    found = covariant_residuals(gamma, frame)
    checks.update(nabla_g=found.nabla_g, nabla_F=found.nabla_F, torsion_skew=skew_residual(T))
    return gamma


def hermitian_skew_torsion(frame: PointFrame, tol: float = NGTLAB_SYMBOLIC_TOL) -> ConditionalResult:
    """Almost Hermitian case: exists iff N is totally skew, with T = N + dF(AX,AY,AZ)."""
    N = nijenhuis_lowered(frame)
    condition = total_skew_residual(N)
    if condition > tol:
        return ConditionalResult("nijenhuis_total_skew", condition, tol)
    T = N + compose_slots(frame.exterior_dF, {0: frame.A, 1: frame.A, 2: frame.A})
    checks = {}
    gamma = _parallel_checks(T, frame, checks)
    return ConditionalResult("nijenhuis_total_skew", condition, tol, checks, torsion=T, gamma=gamma)


def para_hermitian_skew_torsion(frame: PointFrame, tol: float = NGTLAB_SYMBOLIC_TOL) -> ConditionalResult:
    """Almost para-Hermitian case: exists iff N is totally skew, with T = -N + dF(AX,AY,AZ)."""
    N = nijenhuis_lowered(frame)
    condition = total_skew_residual(N)
    if condition > tol:
        return ConditionalResult("nijenhuis_total_skew", condition, tol)
    T = -N + compose_slots(frame.exterior_dF, {0: frame.A, 1: frame.A, 2: frame.A})
    checks = {}
    gamma = _parallel_checks(T, frame, checks)
    return ConditionalResult("nijenhuis_total_skew", condition, tol, checks, torsion=T, gamma=gamma)


def torsion_from_image(frame: PointFrame) -> np.ndarray:
    """T = -N(AX,AY,Z) + dF(AX,AY,AZ) + eta(X) d eta(Y,Z) + eta(Y) d eta(Z,X).

    Valid for both contact classes: it only uses T(AX,AY,Z) = -N(X,Y,Z) + dF(X,Y,AZ)
    and d eta = xi -| T.
    """
    A, eta, deta = frame.A, frame.eta, frame.exterior_deta
    image = np.einsum("i,jk->ijk", eta, deta)
    return (
        -compose_slots(nijenhuis_lowered(frame), {0: A, 1: A})
        + compose_slots(frame.exterior_dF, {0: A, 1: A, 2: A})
        + image
        + permute(image, "yzx")
    )


def _contact_checks(T: np.ndarray, frame: PointFrame, checks: dict) -> np.ndarray:
    gamma = _parallel_checks(T, frame, checks)
    deta = frame.exterior_deta
    checks.update(
        nabla_eta=max_abs(covariant_derivative(gamma, frame.eta, frame.deta, (0, 1))),
        nabla_xi=max_abs(covariant_derivative(gamma, frame.xi, frame.dxi, (1, 0))),
        deta_interior_torsion=max_abs(deta - contract(frame.xi, T, 0)),
        xi_interior_deta=max_abs(frame.xi @ deta),
    )
    return gamma


def contact_skew_torsion(frame: PointFrame, tol: float = NGTLAB_SYMBOLIC_TOL) -> ConditionalResult:
    """Almost contact metric case: N^ac totally skew and xi Killing."""
    A, eta = frame.A, frame.eta
    deta = frame.exterior_deta
    n_ac = contact_nijenhuis(frame, 1.0)
    killing = killing_residual(frame)
    condition = max(total_skew_residual(n_ac), killing)
    if condition > tol:
        return ConditionalResult(
            "contact_nijenhuis_total_skew_and_killing",
            condition,
            tol,
            info={"killing": killing},
        )
    deta_AA = compose_slots(deta, {0: A, 1: A})
    T = (
        nijenhuis_lowered(frame)
        + np.einsum("ij,k->ijk", deta, eta)
        + compose_slots(frame.exterior_dF, {0: A, 1: A, 2: A})
        + wedge(deta_AA, eta)
    )
    checks = {}
    gamma = _contact_checks(T, frame, checks)
    # interior-product completion of the N^ac form, reported only
    alternative = (
        wedge(deta, eta)
        + n_ac
        + compose_slots(frame.exterior_dF, {0: A, 1: A, 2: A})
        - wedge(contract(frame.xi, n_ac, 0), eta)
    )
    info = {
        "killing": killing,
        "nac_form": max_abs(T - alternative),
        "image_form": max_abs(T - torsion_from_image(frame)),
    }
    logger.debug("[INFO] contact torsion vs N^ac completion: %.2e", info["nac_form"])
    return ConditionalResult(
        "contact_nijenhuis_total_skew_and_killing",
        condition,
        tol,
        checks,
        info,
        torsion=T,
        gamma=gamma,
    )


def paracontact_skew_torsion(frame: PointFrame, tol: float = NGTLAB_SYMBOLIC_TOL) -> ConditionalResult:
    """Almost paracontact metric case: N^apc totally skew and xi Killing."""
    A, eta = frame.A, frame.eta
    n_apc = contact_nijenhuis(frame, -1.0)
    killing = killing_residual(frame)
    condition = max(total_skew_residual(n_apc), killing)
    if condition > tol:
        return ConditionalResult(
            "paracontact_nijenhuis_total_skew_and_killing",
            condition,
            tol,
            info={"killing": killing},
        )
    T = torsion_from_image(frame)
    checks = {}
    gamma = _contact_checks(T, frame, checks)
    displayed = (
        wedge(frame.exterior_deta, eta)
        - n_apc
        + compose_slots(frame.exterior_dF, {0: A, 1: A, 2: A})
        + wedge(contract(frame.xi, n_apc, 0), eta)
    )
    info = {"killing": killing, "napc_form": max_abs(T - displayed)}
    return ConditionalResult(
        "paracontact_nijenhuis_total_skew_and_killing",
        condition,
        tol,
        checks,
        info,
        torsion=T,
        gamma=gamma,
    )
