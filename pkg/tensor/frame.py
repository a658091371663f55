"""
Generalized metrics G = g + F and their evaluated point frames.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from shared.errors import ShapeError

from .fields import TensorField
from .operators import d_one_form, d_two_form, inverse_partials, invert_metric


def endomorphism_from_two_form(ginv: np.ndarray, F: np.ndarray) -> np.ndarray:
    """A with F(X,Y) = g(AX,Y): F_ij = A^k_i g_kj, so A = -g^-1 F."""
    return -ginv @ F


def recover_a(g: TensorField, F: TensorField, p) -> np.ndarray:
    """Components A^i_j of the fundamental endomorphism at p."""
    return endomorphism_from_two_form(invert_metric(g.at(p)), F.at(p))


@dataclass(frozen=True)
class PointFrame:
    """Everything the geometry needs at one point, with first partials."""

    point: np.ndarray
    g: np.ndarray
    ginv: np.ndarray
    dg: np.ndarray
    F: np.ndarray
    dF: np.ndarray
    A: np.ndarray
    dA: np.ndarray
    eta: Optional[np.ndarray] = None
    deta: Optional[np.ndarray] = None
    xi: Optional[np.ndarray] = None
    dxi: Optional[np.ndarray] = None

    @property
    def dim(self) -> int:
        return self.g.shape[0]

    @property
    def G(self) -> np.ndarray:
        return self.g + self.F

    @property
    def dG(self) -> np.ndarray:
        return self.dg + self.dF

    @property
    def A2(self) -> np.ndarray:
        return self.A @ self.A

    @property
    def exterior_dF(self) -> np.ndarray:
        return d_two_form(self.dF)

    @property
    def exterior_deta(self) -> Optional[np.ndarray]:
        return None if self.deta is None else d_one_form(self.deta)

    @property
    def has_contact(self) -> bool:
        return self.eta is not None and self.xi is not None


class GeneralizedMetric:
    """The pair (g, F) with derived A, optionally carrying (eta, xi).

    Exactly one of F and A is given; the other is derived pointwise from
    F(X,Y) = g(AX,Y).
    """

    def __init__(
        self,
        g: TensorField,
        F: Optional[TensorField] = None,
        A: Optional[TensorField] = None,
        eta: Optional[TensorField] = None,
        xi: Optional[TensorField] = None,
        name: str = "custom",
    ):
        if (F is None) == (A is None):
            raise ShapeError("give exactly one of the two-form F or the endomorphism A")
        expected = {"g": (g, (0, 2)), "F": (F, (0, 2)), "A": (A, (1, 1)), "eta": (eta, (0, 1)), "xi": (xi, (1, 0))}
        for label, (field, valence) in expected.items():
            if field is not None and field.valence != valence:
                raise ShapeError(f"{label} must have valence {valence}, got {field.valence}")
        if (eta is None) != (xi is None):
            raise ShapeError("eta and xi must be given together")
        self.chart = g.chart
        self.g = g
        self.F = F
        self.A = A
        self.eta = eta
        self.xi = xi
        self.name = name

    @property
    def fields(self):
        return [f for f in (self.g, self.F, self.A, self.eta, self.xi) if f is not None]

    @property
    def is_symbolic(self) -> bool:
        return all(f.is_symbolic for f in self.fields)

    @property
    def has_contact(self) -> bool:
        return self.eta is not None

    def frame(self, p) -> PointFrame:
        p = np.asarray(p, dtype=float)
        g, dg = self.g.jet(p)
        ginv = invert_metric(g)
        if self.F is not None:
            F, dF = self.F.jet(p)
            A = endomorphism_from_two_form(ginv, F)
            dginv = inverse_partials(ginv, dg)
            dA = -(np.einsum("mab,bc->mac", dginv, F) + np.einsum("ab,mbc->mac", ginv, dF))
        else:
            A, dA = self.A.jet(p)
            F = A.T @ g
            dF = np.einsum("mki,kj->mij", dA, g) + np.einsum("ki,mkj->mij", A, dg)
        eta = deta = xi = dxi = None
        if self.eta is not None:
            eta, deta = self.eta.jet(p)
            xi, dxi = self.xi.jet(p)
        return PointFrame(p, g, ginv, dg, F, dF, A, dA, eta, deta, xi, dxi)
