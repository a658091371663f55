"""
Primitive differential and algebraic operators on component arrays.

Conventions used throughout ngtlab:
    nabla_{d_i} d_j = Gamma^k_ij d_k, stored as gamma[k, i, j]
    T^k_ij = Gamma^k_ij - Gamma^k_ji
    (1,1) arrays a[i, j] = A^i_j; (0,3) arrays t[i, j, k] = t(d_i, d_j, d_k)
    derivative indices come first: partials[m, ...] = d_m of values[...]
"""

from typing import Dict

import numpy as np

from shared.config import NGTLAB_COND_LIMIT
from shared.errors import ShapeError, SingularMetricError


def invert_metric(g: np.ndarray, cond_limit: float = NGTLAB_COND_LIMIT) -> np.ndarray:
    """Inverse of g; raises SingularMetricError when g is (numerically) singular."""
    g = np.asarray(g, dtype=float)
    if not np.all(np.isfinite(g)):
        raise SingularMetricError("metric has non-finite components")
    cond = np.linalg.cond(g)
    if not np.isfinite(cond) or cond > cond_limit:
        raise SingularMetricError(f"metric condition number {cond:.3e} exceeds {cond_limit:.0e}")
    return np.linalg.inv(g)


def inverse_partials(ginv: np.ndarray, dg: np.ndarray) -> np.ndarray:
    """d_m(g^-1) = -g^-1 (d_m g) g^-1."""
    return -np.einsum("ab,mbc,cd->mad", ginv, dg, ginv)


def d_two_form(dF: np.ndarray) -> np.ndarray:
    """dF_ijk = d_i F_jk + d_j F_ki + d_k F_ij from partials dF[m, a, b]."""
    return dF + np.einsum("jki->ijk", dF) + np.einsum("kij->ijk", dF)


def d_one_form(deta: np.ndarray) -> np.ndarray:
    """d eta_ij = d_i eta_j - d_j eta_i from partials deta[m, a]."""
    return deta - deta.T


def exterior_derivative2(F, p) -> np.ndarray:
    """dF of a skew (0,2) field at p."""
    if F.valence != (0, 2):
        raise ShapeError("exterior_derivative2 needs a (0,2) field")
    return d_two_form(F.jet(p)[1])


def exterior_derivative1(eta, p) -> np.ndarray:
    """d eta of a (0,1) field at p."""
    if eta.valence != (0, 1):
        raise ShapeError("exterior_derivative1 needs a (0,1) field")
    return d_one_form(eta.jet(p)[1])


def covariant_derivative(gamma: np.ndarray, values: np.ndarray, partials: np.ndarray, valence) -> np.ndarray:
    """nabla S with the derivative slot first, for valence (0,1), (0,2), (1,0) or (1,1)."""
    valence = tuple(valence)
    if valence == (0, 2):
        return (
            partials
            - np.einsum("pmi,pj->mij", gamma, values)
            - np.einsum("pmj,ip->mij", gamma, values)
        )
    if valence == (0, 1):
        return partials - np.einsum("pmi,p->mi", gamma, values)
    if valence == (1, 0):
        return partials + np.einsum("kmp,p->mk", gamma, values)
    if valence == (1, 1):
        return (
            partials
            + np.einsum("imp,pj->mij", gamma, values)
            - np.einsum("pmj,ip->mij", gamma, values)
        )
    raise ShapeError(f"covariant derivative of valence {valence} is not supported")


def torsion(gamma: np.ndarray, g: np.ndarray):
    """(1,2) torsion and its g-lowered (0,3) form T(X,Y,Z) = g(T(X,Y),Z)."""
    t12 = gamma - np.einsum("kji->kij", gamma)
    return t12, lower(t12, g)


def lower(t12: np.ndarray, g: np.ndarray) -> np.ndarray:
    """t(X,Y,Z) = g(t(X,Y), Z)."""
    return np.einsum("kij,kl->ijl", t12, g)


def raise_last(t03: np.ndarray, ginv: np.ndarray) -> np.ndarray:
    """Inverse of lower: the vector-valued form t^k_ij."""
    return np.einsum("kl,ijl->kij", ginv, t03)


def compose_slots(t: np.ndarray, endos: Dict[int, np.ndarray]) -> np.ndarray:
    """Insert endomorphisms into slots: {0: A} gives t(AX, Y, Z)."""
    out = t
    for slot, endo in endos.items():
        out = np.moveaxis(np.tensordot(endo, out, axes=([0], [slot])), 0, slot)
    return out


def permute(t: np.ndarray, order: str) -> np.ndarray:
    """Reorder (0,3) slots: permute(t, "zxy")[x, y, z] = t[z, x, y]."""
    return np.einsum(f"{order}->xyz", t)


def contract(vector: np.ndarray, t: np.ndarray, slot: int = 0) -> np.ndarray:
    """Insert a vector into one slot, e.g. xi into the first slot of T."""
    return np.tensordot(vector, t, axes=([0], [slot]))


def skew_residual(t: np.ndarray) -> float:
    """Max deviation of a (0,3) array from total skew-symmetry."""
    return float(
        max(
            np.max(np.abs(t + permute(t, "yxz"))),
            np.max(np.abs(t + permute(t, "xzy"))),
            np.max(np.abs(t + permute(t, "zyx"))),
        )
    )


def lie_derivative_metric(nabla_xi_lowered: np.ndarray) -> np.ndarray:
    """(L_xi g)(X,Y) = g(nabla_X xi, Y) + g(nabla_Y xi, X) for Levi-Civita nabla."""
    return nabla_xi_lowered + nabla_xi_lowered.T


def lie_derivative_two_form(xi: np.ndarray, dxi: np.ndarray, F: np.ndarray, dF: np.ndarray) -> np.ndarray:
    """(L_xi F)_ij = xi^k d_k F_ij + F_kj d_i xi^k + F_ik d_j xi^k (coordinate formula)."""
    return (
        np.einsum("k,kij->ij", xi, dF)
        + np.einsum("kj,ik->ij", F, dxi)
        + np.einsum("ik,jk->ij", F, dxi)
    )
