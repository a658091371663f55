"""
Einstein metricity (NGT) condition for a connection.

    d_m G_ij - Gamma^p_im G_pj - Gamma^p_mj G_ip = 0
    equivalently (nabla_X G)(Y,Z) = -G(T(X,Y),Z)
"""

import numpy as np

from geometry import nabla_F, nabla_g
from shared.utils import max_abs
from tensor import PointFrame, torsion


def einstein_metricity_array(gamma, frame: PointFrame) -> np.ndarray:
    """(nabla_X G)(Y,Z) + G(T(X,Y),Z) over basis triples."""
    t12, _ = torsion(gamma, frame.g)
    nabla_G = nabla_g(gamma, frame) + nabla_F(gamma, frame)
    return nabla_G + np.einsum("pij,pk->ijk", t12, frame.G)


def einstein_metricity_coordinate(gamma, frame: PointFrame) -> np.ndarray:
    """The coordinate form d_m G_ij - Gamma^p_im G_pj - Gamma^p_mj G_ip, indexed [m, i, j]."""
    G = frame.G
    return (
        frame.dG
        - np.einsum("pim,pj->mij", gamma, G)
        - np.einsum("pmj,ip->mij", gamma, G)
    )


def einstein_metricity_residual(gamma, frame: PointFrame) -> float:
    return max_abs(einstein_metricity_array(gamma, frame))
