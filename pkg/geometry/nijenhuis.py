"""
Nijenhuis tensor of the fundamental endomorphism A.

N(X,Y) = [AX,AY] + A^2[X,Y] - A[AX,Y] - A[X,AY]; in coordinates the
brackets of coordinate fields vanish and only first derivatives of A remain.
"""

import numpy as np

from shared.utils import max_abs
from tensor import PointFrame, compose_slots, lower, permute, torsion

from .connections import levi_civita_nabla_F, nabla_A


def nijenhuis(frame: PointFrame):
    """(1,2) components N[k,i,j] = N^k_ij and the lowered form N(X,Y,Z) = g(N(X,Y),Z)."""
    A, dA = frame.A, frame.dA
    n12 = (
        np.einsum("pi,pkj->kij", A, dA)
        - np.einsum("pj,pki->kij", A, dA)
        + np.einsum("kp,jpi->kij", A, dA)
        - np.einsum("kp,ipj->kij", A, dA)
    )
    return n12, lower(n12, frame.g)


def nijenhuis_lowered(frame: PointFrame) -> np.ndarray:
    return nijenhuis(frame)[1]


def nijenhuis_via_nabla_a(gamma, frame: PointFrame) -> np.ndarray:
    """N through nabla A and the torsion of an arbitrary connection:

    N(X,Y) = (nabla_AX A)Y - (nabla_AY A)X - A(nabla_X A)Y + A(nabla_Y A)X
             - T(AX,AY) - A^2 T(X,Y) + A T(AX,Y) + A T(X,AY)
    """
    A = frame.A
    nA = nabla_A(gamma, frame)
    t12, _ = torsion(gamma, frame.g)
    n12 = (
        np.einsum("pi,pkj->kij", A, nA)
        - np.einsum("pj,pki->kij", A, nA)
        - np.einsum("kp,ipj->kij", A, nA)
        + np.einsum("kp,jpi->kij", A, nA)
        - np.einsum("pi,qj,kpq->kij", A, A, t12)
        - np.einsum("kp,pij->kij", frame.A2, t12)
        + np.einsum("kp,pqj,qi->kij", A, t12, A)
        + np.einsum("kp,piq,qj->kij", A, t12, A)
    )
    return lower(n12, frame.g)


def nijenhuis_nabla_a_form(T, frame: PointFrame) -> np.ndarray:
    """The nabla A = 0 (and nabla g = 0) specialization:

    N(X,Y,Z) = -T(AX,AY,Z) - T(X,Y,A^2 Z) - T(AX,Y,AZ) - T(X,AY,AZ)
    """
    A = frame.A
    return -(
        compose_slots(T, {0: A, 1: A})
        + compose_slots(T, {2: frame.A2})
        + compose_slots(T, {0: A, 2: A})
        + compose_slots(T, {1: A, 2: A})
    )


def eisenhart_nijenhuis_rhs(frame: PointFrame) -> np.ndarray:
    """(nabla^g_AX F)(Y,Z) - (nabla^g_AY F)(X,Z) + (nabla^g_X F)(Y,AZ) - (nabla^g_Y F)(X,AZ)."""
    nF = levi_civita_nabla_F(frame)
    first = compose_slots(nF, {0: frame.A})
    last = compose_slots(nF, {2: frame.A})
    return first - permute(first, "yxz") + last - permute(last, "yxz")


def eisenhart_nijenhuis_residual(frame: PointFrame) -> float:
    return max_abs(nijenhuis_lowered(frame) - eisenhart_nijenhuis_rhs(frame))
