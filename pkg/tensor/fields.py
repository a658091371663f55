"""
Scalar and tensor fields with first-derivative evaluation.

Derivative arrays always carry the differentiation index first:
partials[m, ...] is the m-th coordinate derivative of values[...].
"""

from abc import ABC, abstractmethod
from itertools import product
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from exprlang import Expr, compile_expr, differentiate, parse
from shared.config import NGTLAB_FD_STEP
from shared.errors import ShapeError

SYMBOLIC = "symbolic"
USER = "user"
FINITE_DIFFERENCE = "fd"

SYMMETRIES = ("none", "symmetric", "skew")


def central_difference(fn: Callable, x: np.ndarray, step: float = NGTLAB_FD_STEP):
    """Central differences of a scalar- or array-valued fn, step scaled by max(1,|x_i|)."""
    x = np.asarray(x, dtype=float)
    columns = []
    for i in range(x.size):
        h = step * max(1.0, abs(x[i]))
        forward = x.copy()
        backward = x.copy()
        forward[i] += h
        backward[i] -= h
        columns.append((np.asarray(fn(forward)) - np.asarray(fn(backward))) / (2.0 * h))
    return np.stack(columns)


class ScalarField(ABC):
    """A real function on a chart with its gradient."""

    method: str = SYMBOLIC

    @abstractmethod
    def value(self, x: np.ndarray) -> float: ...

    @abstractmethod
    def gradient(self, x: np.ndarray) -> np.ndarray: ...


class ExprField(ScalarField):
    """Expression-backed field; derivatives are exact."""

    method = SYMBOLIC

    def __init__(self, expr: Expr, coords: Sequence[str]):
        self.expr = expr
        self.coords = tuple(coords)
        self._value = compile_expr(expr, self.coords)
        self.derivatives = tuple(differentiate(expr, c) for c in self.coords)
        self._gradient = tuple(compile_expr(d, self.coords) for d in self.derivatives)

    def value(self, x):
        return self._value(x)

    def gradient(self, x):
        return np.array([g(x) for g in self._gradient])

    def __repr__(self):
        return f"ExprField({self.expr})"


class CallableField(ScalarField):
    """Callable-backed field with a user gradient or central differences."""

    def __init__(
        self,
        fn: Callable[[np.ndarray], float],
        gradient: Optional[Callable[[np.ndarray], np.ndarray]] = None,
        step: float = NGTLAB_FD_STEP,
    ):
        self.fn = fn
        self._gradient = gradient
        self.step = step
        self.method = USER if gradient is not None else FINITE_DIFFERENCE

    def value(self, x):
        return float(self.fn(np.asarray(x, dtype=float)))

    def gradient(self, x):
        x = np.asarray(x, dtype=float)
        if self._gradient is not None:
            return np.asarray(self._gradient(x), dtype=float)
        return central_difference(self.value, x, self.step)


class TensorField(ABC):
    """Field of (covariant, contravariant) valence on a chart."""

    def __init__(self, chart, valence: Tuple[int, int], symmetry: str = "none"):
        if symmetry not in SYMMETRIES:
            raise ShapeError(f"unknown symmetry {symmetry!r}")
        if symmetry != "none" and sum(valence) != 2:
            raise ShapeError("symmetry declarations are only supported for rank-2 fields")
        self.chart = chart
        self.valence = tuple(valence)
        self.symmetry = symmetry

    @property
    def rank(self) -> int:
        return sum(self.valence)

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.chart.dim,) * self.rank

    @property
    @abstractmethod
    def method(self) -> str: ...

    @property
    def is_symbolic(self) -> bool:
        return self.method != FINITE_DIFFERENCE

    @abstractmethod
    def jet(self, x) -> Tuple[np.ndarray, np.ndarray]:
        """Component values and first partials at x."""

    def at(self, x) -> np.ndarray:
        return self.jet(x)[0]

    def symmetry_residual(self, x) -> float:
        values = self.at(x)
        if self.symmetry == "symmetric":
            return float(np.max(np.abs(values - values.T)))
        if self.symmetry == "skew":
            return float(np.max(np.abs(values + values.T)))
        return 0.0


class ComponentField(TensorField):
    """Tensor field given by one scalar field per component."""

    def __init__(self, chart, valence, components: np.ndarray, symmetry: str = "none"):
        super().__init__(chart, valence, symmetry)
        components = np.asarray(components, dtype=object)
        if components.shape != self.shape:
            raise ShapeError(
                f"component array has shape {components.shape}, expected {self.shape}"
            )
        self.components = components

    @property
    def method(self) -> str:
        methods = {c.method for c in self.components.flat}
        for m in (FINITE_DIFFERENCE, USER):
            if m in methods:
                return m
        return SYMBOLIC

    def jet(self, x):
        x = np.asarray(x, dtype=float)
        n = self.chart.dim
        values = np.zeros(self.shape)
        partials = np.zeros((n,) + self.shape)
        for idx in product(range(n), repeat=self.rank):
            component = self.components[idx]
            if isinstance(component, ConstantField) and component.constant == 0.0:
                continue
            values[idx] = component.value(x)
            partials[(slice(None),) + idx] = component.gradient(x)
        return values, partials


class ConstantField(ScalarField):
    method = SYMBOLIC

    def __init__(self, constant: float, dim: int):
        self.constant = float(constant)
        self.dim = dim

    def value(self, x):
        return self.constant

    def gradient(self, x):
        return np.zeros(self.dim)


class ArrayField(TensorField):
    """Tensor field computed as a whole array by one callable.

    jet_fn, when given, returns (values, partials) analytically; otherwise
    partials come from central differences of fn.
    """

    def __init__(
        self,
        chart,
        valence,
        fn: Callable[[np.ndarray], np.ndarray],
        jet_fn: Optional[Callable] = None,
        symmetry: str = "none",
        step: float = NGTLAB_FD_STEP,
    ):
        super().__init__(chart, valence, symmetry)
        self.fn = fn
        self.jet_fn = jet_fn
        self.step = step

    @property
    def method(self) -> str:
        return USER if self.jet_fn is not None else FINITE_DIFFERENCE

    def jet(self, x):
        x = np.asarray(x, dtype=float)
        if self.jet_fn is not None:
            values, partials = self.jet_fn(x)
        else:
            values = self.fn(x)
            partials = central_difference(self.fn, x, self.step)
        return np.asarray(values, dtype=float), np.asarray(partials, dtype=float)


class LinearMapField(TensorField):
    """Componentwise linear image of another field (symmetrization, padding)."""

    def __init__(self, source: TensorField, transform: Callable, valence, symmetry="none", chart=None):
        super().__init__(chart or source.chart, valence, symmetry)
        self.source = source
        self.transform = transform

    @property
    def method(self) -> str:
        return self.source.method

    def jet(self, x):
        values, partials = self.source.jet(x)
        return self.transform(values), np.stack([self.transform(d) for d in partials])


def from_expressions(chart, table, valence, symmetry: str = "none") -> ComponentField:
    """Field whose components are expression strings (or Expr nodes, or numbers)."""
    table = np.asarray(table, dtype=object)
    components = np.empty(table.shape, dtype=object)
    for idx in np.ndindex(table.shape):
        entry = table[idx]
        if isinstance(entry, (int, float)) and float(entry) == 0.0:
            components[idx] = ConstantField(0.0, chart.dim)
            continue
        expr = entry if isinstance(entry, Expr) else parse(str(entry), chart)
        components[idx] = ExprField(expr, chart.coords)
    return ComponentField(chart, valence, components, symmetry)


def constant_field(chart, array, valence, symmetry: str = "none") -> ComponentField:
    array = np.asarray(array, dtype=float)
    components = np.empty(array.shape, dtype=object)
    for idx in np.ndindex(array.shape):
        components[idx] = ConstantField(array[idx], chart.dim)
    return ComponentField(chart, valence, components, symmetry)


def _symmetrize(a):
    return 0.5 * (a + a.T)


def _antisymmetrize(a):
    return 0.5 * (a - a.T)


def decompose(G: TensorField, probes: Optional[np.ndarray] = None):
    """Split a (0,2) field G into its symmetric part g and skew part F.

    When probes is given, det g is checked at every probe point.
    """
    from .operators import invert_metric

    if G.valence != (0, 2):
        raise ShapeError(f"decompose expects a (0,2) field, got valence {G.valence}")
    g = LinearMapField(G, _symmetrize, (0, 2), "symmetric")
    F = LinearMapField(G, _antisymmetrize, (0, 2), "skew")
    if probes is not None:
        for p in probes:
            invert_metric(g.at(p))
    return g, F


class ScaledField(ScalarField):
    """c * f, used for the lower triangle of skew fields."""

    def __init__(self, field: ScalarField, factor: float):
        self.field = field
        self.factor = float(factor)
        self.method = field.method

    def value(self, x):
        return self.factor * self.field.value(x)

    def gradient(self, x):
        return self.factor * self.field.gradient(x)


def skew_from_expressions(chart, upper) -> ComponentField:
    """Skew (0,2) field from its strict upper triangle {(i, j): expression}, i < j.

    The lower triangle reuses the upper components with a sign flip, so skewness is exact.
    """
    n = chart.dim
    components = np.empty((n, n), dtype=object)
    for idx in np.ndindex(n, n):
        components[idx] = ConstantField(0.0, n)
    for (i, j), entry in upper.items():
        if not 0 <= i < j < n:
            raise ShapeError(f"two-form key ({i + 1},{j + 1}) is not in the strict upper triangle")
        if isinstance(entry, (int, float)) and float(entry) == 0.0:
            continue
        expr = entry if isinstance(entry, Expr) else parse(str(entry), chart)
        field = ExprField(expr, chart.coords)
        components[i, j] = field
        components[j, i] = ScaledField(field, -1.0)
    return ComponentField(chart, (0, 2), components, "skew")
