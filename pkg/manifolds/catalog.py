"""
Builtin generalized Riemannian manifolds, addressable by name.

Each builtin is a GeneralizedMetric on a chart whose sampling box keeps the
metric well conditioned.
"""

import logging
import re
from dataclasses import dataclass
from typing import Callable, Dict, List

import numpy as np

from shared.errors import NgtLabError
from structures import StructureKind
from tensor import ArrayField, Chart, GeneralizedMetric, constant_field, from_expressions

from .octonions import sphere_endomorphism, sphere_endomorphism_jet

logger = logging.getLogger(__name__)

SPHERE_COORDS = tuple(f"u{i}" for i in range(1, 7))
SPHERE_BOX = tuple((-0.8, 0.8) for _ in SPHERE_COORDS)


def _sphere_predicate(u) -> bool:
    return float(np.linalg.norm(u[:6])) <= 10.0


def _sphere_metric_table(coords, pad: int = 0):
    conformal = "4/(1 + " + " + ".join(f"{c}^2" for c in SPHERE_COORDS) + ")^2"
    n = len(coords)
    table = [[0] * n for _ in range(n)]
    for i in range(6):
        table[i][i] = conformal
    for i in range(6, 6 + pad):
        table[i][i] = "1"
    return table


def _standard_complex(dim: int) -> np.ndarray:
    J = np.zeros((dim, dim))
    for a in range(0, dim - dim % 2, 2):
        J[a + 1, a] = 1.0
        J[a, a + 1] = -1.0
    return J


def _standard_para(dim: int) -> np.ndarray:
    P = np.zeros((dim, dim))
    for a in range(0, dim - dim % 2, 2):
        P[a + 1, a] = 1.0
        P[a, a + 1] = 1.0
    return P


def _neutral(dim: int) -> np.ndarray:
    return np.diag([1.0 if a % 2 == 0 else -1.0 for a in range(dim)])


def _line_contact(chart: Chart):
    e_t = np.eye(chart.dim)[-1]
    return constant_field(chart, e_t, (0, 1)), constant_field(chart, e_t, (1, 0))


def s6_nearly_kahler() -> GeneralizedMetric:
    """Round S^6 with the almost complex structure p x (.) of the octonions."""
    chart = Chart(SPHERE_COORDS, SPHERE_BOX, _sphere_predicate)
    g = from_expressions(chart, _sphere_metric_table(SPHERE_COORDS), (0, 2), "symmetric")
    A = ArrayField(chart, (1, 1), sphere_endomorphism, jet_fn=sphere_endomorphism_jet)
    return GeneralizedMetric(g, A=A, name="s6-nearly-kahler")


def nk_times_line() -> GeneralizedMetric:
    """S^6 x R with eta = dt, xi = d/dt and A xi = 0."""
    coords = SPHERE_COORDS + ("t",)
    chart = Chart(coords, SPHERE_BOX + ((-2.0, 2.0),), _sphere_predicate)
    g = from_expressions(chart, _sphere_metric_table(coords, pad=1), (0, 2), "symmetric")

    def endomorphism(x):
        A = np.zeros((7, 7))
        A[:6, :6] = sphere_endomorphism(x[:6])
        return A

    def jet(x):
        A6, dA6 = sphere_endomorphism_jet(x[:6])
        A = np.zeros((7, 7))
        dA = np.zeros((7, 7, 7))
        A[:6, :6] = A6
        dA[:6, :6, :6] = dA6
        return A, dA

    eta, xi = _line_contact(chart)
    A = ArrayField(chart, (1, 1), endomorphism, jet_fn=jet)
    return GeneralizedMetric(g, A=A, eta=eta, xi=xi, name="nk-times-line")


def contact_r3() -> GeneralizedMetric:
    """The standard contact metric structure on R^3 with eta = (dz - y dx)/2."""
    chart = Chart(("x1", "x2", "x3"))
    g = from_expressions(
        chart,
        [
            ["x2^2/4 + 1/4", 0, "-x2/4"],
            [0, "1/4", 0],
            ["-x2/4", 0, "1/4"],
        ],
        (0, 2),
        "symmetric",
    )
    A = from_expressions(chart, [[0, 1, 0], [-1, 0, 0], [0, "x2", 0]], (1, 1))
    eta = from_expressions(chart, ["-x2/2", 0, "1/2"], (0, 1))
    xi = constant_field(chart, [0.0, 0.0, 2.0], (1, 0))
    return GeneralizedMetric(g, A=A, eta=eta, xi=xi, name="contact-r3")


def deformed_hermitian_r4() -> GeneralizedMetric:
    """Flat R^4 with the standard complex structure conjugated by a rotation by x1 in the (2,4)-plane."""
    chart = Chart(("x1", "x2", "x3", "x4"))
    g = constant_field(chart, np.eye(4), (0, 2), "symmetric")
    c, s = "cos(x1)", "sin(x1)"
    A = from_expressions(
        chart,
        [
            [0, f"-{c}", 0, f"-{s}"],
            [c, 0, f"-{s}", 0],
            [0, s, 0, f"-{c}"],
            [s, 0, c, 0],
        ],
        (1, 1),
    )
    return GeneralizedMetric(g, A=A, name="deformed-hermitian-r4")


def flat_kahler(m: int) -> GeneralizedMetric:
    if m < 1:
        raise NgtLabError("flat Kaehler needs m >= 1")
    chart = Chart(tuple(f"x{i}" for i in range(1, 2 * m + 1)))
    g = constant_field(chart, np.eye(2 * m), (0, 2), "symmetric")
    A = constant_field(chart, _standard_complex(2 * m), (1, 1))
    return GeneralizedMetric(g, A=A, name=f"flat-kahler-{2 * m}")


def flat_para_kahler(m: int) -> GeneralizedMetric:
    if m < 1:
        raise NgtLabError("flat para-Kaehler needs m >= 1")
    chart = Chart(tuple(f"x{i}" for i in range(1, 2 * m + 1)))
    g = constant_field(chart, _neutral(2 * m), (0, 2), "symmetric")
    A = constant_field(chart, _standard_para(2 * m), (1, 1))
    return GeneralizedMetric(g, A=A, name=f"flat-para-kahler-{2 * m}")


def flat_kahler_times_line(m: int) -> GeneralizedMetric:
    """Flat cosymplectic R^{2m} x R."""
    if m < 1:
        raise NgtLabError("flat Kaehler times line needs m >= 1")
    chart = Chart(tuple(f"x{i}" for i in range(1, 2 * m + 1)) + ("t",))
    n = 2 * m + 1
    g = constant_field(chart, np.eye(n), (0, 2), "symmetric")
    A = constant_field(chart, _standard_complex(n), (1, 1))
    eta, xi = _line_contact(chart)
    return GeneralizedMetric(g, A=A, eta=eta, xi=xi, name=f"flat-kahler-times-line-{n}")


def para_product_line() -> GeneralizedMetric:
    """Flat para-Kaehler R^4 x R with eta = dt."""
    chart = Chart(("x1", "x2", "x3", "x4", "t"))
    g_matrix = np.eye(5)
    g_matrix[:4, :4] = _neutral(4)
    A_matrix = _standard_para(5)
    g = constant_field(chart, g_matrix, (0, 2), "symmetric")
    A = constant_field(chart, A_matrix, (1, 1))
    eta, xi = _line_contact(chart)
    return GeneralizedMetric(g, A=A, eta=eta, xi=xi, name="para-product-line")


@dataclass(frozen=True)
class Builtin:
    """Catalog entry."""

    name: str
    description: str
    kind: StructureKind
    factory: Callable[[], GeneralizedMetric]


BUILTINS: Dict[str, Builtin] = {
    b.name: b
    for b in (
        Builtin("s6-nearly-kahler", "round S^6, octonionic nearly Kaehler structure", StructureKind.ALMOST_HERMITIAN, s6_nearly_kahler),
        Builtin("nk-times-line", "S^6 x R, almost-nearly cosymplectic with eta = dt", StructureKind.ALMOST_CONTACT, nk_times_line),
        Builtin("contact-r3", "standard contact metric R^3", StructureKind.ALMOST_CONTACT, contact_r3),
        Builtin("deformed-hermitian-r4", "flat R^4 with a rotating, non nearly Kaehler complex structure", StructureKind.ALMOST_HERMITIAN, deformed_hermitian_r4),
        Builtin("para-product-line", "flat para-Kaehler R^4 x R, eta = dt", StructureKind.ALMOST_PARA_CONTACT, para_product_line),
        Builtin("flat-kahler-2", "flat Kaehler R^2", StructureKind.ALMOST_HERMITIAN, lambda: flat_kahler(1)),
        Builtin("flat-kahler-4", "flat Kaehler R^4", StructureKind.ALMOST_HERMITIAN, lambda: flat_kahler(2)),
        Builtin("flat-para-kahler-2", "flat para-Kaehler R^2", StructureKind.ALMOST_PARA_HERMITIAN, lambda: flat_para_kahler(1)),
        Builtin("flat-para-kahler-4", "flat para-Kaehler R^4", StructureKind.ALMOST_PARA_HERMITIAN, lambda: flat_para_kahler(2)),
        Builtin("flat-kahler-times-line-3", "flat cosymplectic R^2 x R", StructureKind.ALMOST_CONTACT, lambda: flat_kahler_times_line(1)),
        Builtin("flat-kahler-times-line-5", "flat cosymplectic R^4 x R", StructureKind.ALMOST_CONTACT, lambda: flat_kahler_times_line(2)),
    )
}

_FAMILIES = (
    (re.compile(r"flat-kahler-times-line-(\d+)$"), lambda n: flat_kahler_times_line((n - 1) // 2), 1),
    (re.compile(r"flat-para-kahler-(\d+)$"), lambda n: flat_para_kahler(n // 2), 0),
    (re.compile(r"flat-kahler-(\d+)$"), lambda n: flat_kahler(n // 2), 0),
)


def builtin_names() -> List[str]:
    return sorted(BUILTINS)


def builtin(name: str) -> GeneralizedMetric:
    """Resolve a builtin by name; the flat families accept any admissible dimension."""
    if name in BUILTINS:
        return BUILTINS[name].factory()
    for pattern, factory, parity in _FAMILIES:
        match = pattern.match(name)
        if match:
            n = int(match.group(1))
            if n < 2 or n % 2 != parity:
                raise NgtLabError(f"builtin {name!r}: dimension {n} does not fit the family")
            return factory(n)
    raise NgtLabError(f"unknown builtin {name!r}; known: {', '.join(builtin_names())}")
