"""
Seven-dimensional cross product from the octonion multiplication table,
and the nearly Kaehler structure it induces on the round six-sphere.
"""

import numpy as np

# Oriented Fano-plane triples (1-based): e_i e_j = e_k for each (i, j, k)
FANO_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))


def structure_constants() -> np.ndarray:
    """eps[i, j, k] with (u x v)_k = eps[i, j, k] u_i v_j."""
    eps = np.zeros((7, 7, 7))
    for triple in FANO_TRIPLES:
        i, j, k = (t - 1 for t in triple)
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            eps[a, b, c] = 1.0
            eps[b, a, c] = -1.0
    return eps


EPSILON = structure_constants()


def cross(u, v) -> np.ndarray:
    return np.einsum("ijk,i,j->k", EPSILON, u, v)


def cross_matrix(p) -> np.ndarray:
    """C with C @ x = p x x."""
    return np.einsum("ijk,i->kj", EPSILON, np.asarray(p, dtype=float))


# e_7 is the pole hit by u = 0
_EMBED = np.vstack([np.eye(6), np.zeros((1, 6))])
_POLE = np.eye(7)[6]


def sphere_point(u) -> np.ndarray:
    """Inverse stereographic projection R^6 -> S^6 in R^7."""
    u = np.asarray(u, dtype=float)
    D = 1.0 + u @ u
    q = np.append(u, 1.0)
    return (2.0 / D) * q - _POLE


def _frame(u):
    u = np.asarray(u, dtype=float)
    D = 1.0 + u @ u
    q = np.append(u, 1.0)
    B = _EMBED - (2.0 / D) * np.outer(q, u)
    p = (2.0 / D) * q - _POLE
    return u, D, q, B, p


def sphere_endomorphism(u) -> np.ndarray:
    """A^i_j(u): the chart Jacobian is (2/D) B with B^T B = I, so A = B^T C(p) B."""
    _, _, _, B, p = _frame(u)
    return B.T @ cross_matrix(p) @ B


def sphere_endomorphism_jet(u):
    """A and its exact partials dA[l, i, j] on the stereographic chart."""
    u, D, q, B, p = _frame(u)
    C = cross_matrix(p)
    A = B.T @ C @ B
    dA = np.empty((6, 6, 6))
    for l in range(6):
        e_l = _EMBED[:, l]
        dB = (4.0 * u[l] / D**2) * np.outer(q, u) - (2.0 / D) * (
            np.outer(e_l, u) + np.outer(q, np.eye(6)[l])
        )
        dp = -(4.0 * u[l] / D**2) * q + (2.0 / D) * e_l
        dA[l] = dB.T @ C @ B + B.T @ cross_matrix(dp) @ B + B.T @ C @ dB
    return A, dA
