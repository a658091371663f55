"""
Connections on a generalized Riemannian manifold.

A connection is handled either as Gamma[k, i, j] = Gamma^k_ij or in lowered
form C[i, j, l] = g(nabla_{d_i} d_j, d_l). Every (0,3) array below uses the
slot order (X, Y, Z) = (d_i, d_j, d_k).
"""

from dataclasses import dataclass

import numpy as np

from shared.errors import ShapeError
from shared.utils import max_abs
from tensor import (
    PointFrame,
    compose_slots,
    covariant_derivative,
    d_two_form,
    lower,
    permute,
    raise_last,
    torsion,
)

SYMMETRY_CHECK = 1e-10


def levi_civita_lowered(frame: PointFrame) -> np.ndarray:
    """g(nabla^g_{d_i} d_j, d_l) = 1/2 (d_i g_jl + d_j g_il - d_l g_ij)."""
    dg = frame.dg
    return 0.5 * (dg + np.einsum("jil->ijl", dg) - np.einsum("lij->ijl", dg))


def levi_civita(frame: PointFrame) -> np.ndarray:
    return raise_last(levi_civita_lowered(frame), frame.ginv)


def lowered_connection(gamma: np.ndarray, frame: PointFrame) -> np.ndarray:
    return lower(gamma, frame.g)


def connection_from_lowered(lowered: np.ndarray, frame: PointFrame) -> np.ndarray:
    return raise_last(lowered, frame.ginv)


def nabla_g(gamma, frame: PointFrame) -> np.ndarray:
    return covariant_derivative(gamma, frame.g, frame.dg, (0, 2))


def nabla_F(gamma, frame: PointFrame) -> np.ndarray:
    return covariant_derivative(gamma, frame.F, frame.dF, (0, 2))


def nabla_A(gamma, frame: PointFrame) -> np.ndarray:
    """(nabla_m A)^i_j stored as [m, i, j]."""
    return covariant_derivative(gamma, frame.A, frame.dA, (1, 1))


def nabla_A_lowered(gamma, frame: PointFrame) -> np.ndarray:
    """g((nabla_X A)Y, Z) as a (0,3) array."""
    return np.einsum("mab,ac->mbc", nabla_A(gamma, frame), frame.g)


def levi_civita_nabla_F(frame: PointFrame) -> np.ndarray:
    return nabla_F(levi_civita(frame), frame)


@dataclass(frozen=True)
class CovariantResiduals:
    """Max-norms of nabla g, nabla F and nabla G for one connection."""

    nabla_g: float
    nabla_F: float
    nabla_G: float


def covariant_residuals(gamma, frame: PointFrame) -> CovariantResiduals:
    ng = nabla_g(gamma, frame)
    nf = nabla_F(gamma, frame)
    return CovariantResiduals(max_abs(ng), max_abs(nf), max_abs(ng + nf))


def _check_torsion_and_nabla_g(T, Q):
    scale = 1.0 + max_abs(T) + max_abs(Q)
    if T.ndim != 3 or Q.shape != T.shape:
        raise ShapeError(f"T and nabla g must be (0,3) arrays of equal shape, got {T.shape}, {Q.shape}")
    if max_abs(T + permute(T, "yxz")) > SYMMETRY_CHECK * scale:
        raise ShapeError("torsion must be skew in its first two slots")
    if max_abs(Q - permute(Q, "xzy")) > SYMMETRY_CHECK * scale:
        raise ShapeError("nabla g must be symmetric in its last two slots")


def connection_from_torsion_and_nabla_g(T, Q, frame: PointFrame) -> np.ndarray:
    """The unique connection with prescribed torsion T and nabla g = Q.

    g(nabla_X Y, Z) = g(nabla^g_X Y, Z)
        + 1/2 [T(X,Y,Z) + T(Z,X,Y) - T(Y,Z,X)]
        - 1/2 [Q(X,Y,Z) + Q(Y,Z,X) - Q(Z,Y,X)]
    """
    T = np.asarray(T, dtype=float)
    Q = np.asarray(Q, dtype=float)
    _check_torsion_and_nabla_g(T, Q)
    lowered = (
        levi_civita_lowered(frame)
        + 0.5 * (T + permute(T, "zxy") - permute(T, "yzx"))
        - 0.5 * (Q + permute(Q, "yzx") - permute(Q, "zyx"))
    )
    return connection_from_lowered(lowered, frame)


def induced_nabla_F(T, Q, frame: PointFrame) -> np.ndarray:
    """nabla F of the connection with torsion T and nabla g = Q, from T, Q and nabla^g F."""
    T = np.asarray(T, dtype=float)
    Q = np.asarray(Q, dtype=float)
    _check_torsion_and_nabla_g(T, Q)
    A = frame.A
    TA0, TA1, TA2 = (compose_slots(T, {s: A}) for s in range(3))
    QA0, QA1, QA2 = (compose_slots(Q, {s: A}) for s in range(3))
    torsion_part = 0.5 * (TA2 + permute(TA2, "zxy")) + 0.5 * (
        permute(TA0, "zxy") + permute(TA0, "zyx") + TA1 + permute(TA1, "zyx")
    )
    nabla_g_part = 0.5 * (QA1 - QA2 - permute(QA1, "yzx")) + 0.5 * (
        permute(QA1, "zyx") + permute(QA0, "zyx") - permute(QA0, "yzx")
    )
    return levi_civita_nabla_F(frame) + torsion_part + nabla_g_part


def cyclic_torsion_terms(T, A) -> np.ndarray:
    """T(X,Y,AZ) + T(Y,Z,AX) + T(Z,X,AY)."""
    TA2 = compose_slots(T, {2: A})
    return TA2 + permute(TA2, "yzx") + permute(TA2, "zxy")


def cyclic_sum(t) -> np.ndarray:
    return t + permute(t, "yzx") + permute(t, "zxy")


def cyclic_dF_identity_residual(gamma, frame: PointFrame) -> float:
    """dF + T(X,Y,AZ) + T(Y,Z,AX) + T(Z,X,AY) - cyclic nabla F; zero for every connection."""
    _, T = torsion(gamma, frame.g)
    lhs = d_two_form(frame.dF) + cyclic_torsion_terms(T, frame.A)
    return max_abs(lhs - cyclic_sum(nabla_F(gamma, frame)))


@dataclass(frozen=True)
class MetricCompatResult:
    """Whether T is the torsion of a connection preserving both g and F."""

    residual: float
    cyclic_residual: float
    gamma: np.ndarray
    nabla_g: float
    nabla_F: float


def metric_connection_compat(T, frame: PointFrame) -> MetricCompatResult:
    """nabla^g F residual against T, the cyclic dF relation, and the resulting connection."""
    T = np.asarray(T, dtype=float)
    Q = np.zeros_like(T)
    residual = max_abs(induced_nabla_F(T, Q, frame))
    cyclic = max_abs(d_two_form(frame.dF) + cyclic_torsion_terms(T, frame.A))
    gamma = connection_from_torsion_and_nabla_g(T, Q, frame)
    found = covariant_residuals(gamma, frame)
    return MetricCompatResult(residual, cyclic, gamma, found.nabla_g, found.nabla_F)


def metric_connection_compat_residual(T, frame: PointFrame) -> float:
    return metric_connection_compat(T, frame).residual


def skew_torsion_connection(T, frame: PointFrame) -> np.ndarray:
    """g(nabla_X Y, Z) = g(nabla^g_X Y, Z) + 1/2 T(X,Y,Z) for totally skew T."""
    return connection_from_lowered(levi_civita_lowered(frame) + 0.5 * np.asarray(T), frame)


def eisenhart_connection(frame: PointFrame) -> np.ndarray:
    """Levi-Civita plus half of dF: preserves g, torsion dF."""
    return skew_torsion_connection(d_two_form(frame.dF), frame)
