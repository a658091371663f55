"""
Seeded random fields for property tests: polynomials, expressions,
generalized metrics and point-level tensors.
"""

from typing import Sequence

import numpy as np

from exprlang import FUNCTIONS, Binary, Const, Expr, Pow, Unary, Var
from exprlang.calculus import add, mul
from tensor import Chart, GeneralizedMetric, from_expressions, permute, skew_from_expressions


def random_polynomial(coords: Sequence[str], rng: np.random.Generator, degree: int = 2, terms: int = 3, scale: float = 1.0) -> Expr:
    """Sum of random monomials of total degree <= degree."""
    expr: Expr = Const(round(float(rng.uniform(-scale, scale)), 6))
    for _ in range(terms):
        coefficient = round(float(rng.uniform(-scale, scale)), 6)
        monomial: Expr = Const(coefficient)
        for _ in range(int(rng.integers(1, degree + 1))):
            monomial = mul(monomial, Var(coords[int(rng.integers(len(coords)))]))
        expr = add(expr, monomial)
    return expr


def random_expression(coords: Sequence[str], rng: np.random.Generator, depth: int = 4) -> Expr:
    """Random tree over the whole grammar; constants are non-negative so printing is canonical."""
    if depth <= 0 or rng.random() < 0.25:
        if rng.random() < 0.4:
            return Const(round(float(rng.uniform(0.0, 3.0)), 4))
        return Var(coords[int(rng.integers(len(coords)))])
    choice = rng.random()
    if choice < 0.5:
        op = ("+", "-", "*", "/")[int(rng.integers(4))]
        return Binary(op, random_expression(coords, rng, depth - 1), random_expression(coords, rng, depth - 1))
    if choice < 0.7:
        return Pow(random_expression(coords, rng, depth - 1), int(rng.integers(-2, 4)))
    if choice < 0.8:
        return Unary("neg", random_expression(coords, rng, depth - 1))
    op = FUNCTIONS[int(rng.integers(len(FUNCTIONS)))]
    return Unary(op, random_expression(coords, rng, depth - 1))


def random_chart(dim: int) -> Chart:
    return Chart(tuple(f"x{i}" for i in range(1, dim + 1)), tuple((-0.5, 0.5) for _ in range(dim)))


def random_generalized_metric(dim: int, seed: int, skew_scale: float = 0.5) -> GeneralizedMetric:
    """Polynomial (g, F) with g diagonally dominant on the chart box."""
    rng = np.random.default_rng(seed)
    chart = random_chart(dim)
    coords = chart.coords
    small = 0.1 / dim
    table = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        table[i][i] = add(Const(2.0), random_polynomial(coords, rng, scale=small))
        for j in range(i + 1, dim):
            entry = random_polynomial(coords, rng, scale=small)
            table[i][j] = entry
            table[j][i] = entry
    g = from_expressions(chart, table, (0, 2), "symmetric")
    upper = {
        (i, j): random_polynomial(coords, rng, scale=skew_scale)
        for i in range(dim)
        for j in range(i + 1, dim)
    }
    F = skew_from_expressions(chart, upper)
    return GeneralizedMetric(g, F=F, name=f"random-{dim}-{seed}")


def random_skew_first_pair(dim: int, rng: np.random.Generator) -> np.ndarray:
    """(0,3) array skew in its first two slots."""
    R = rng.normal(size=(dim, dim, dim))
    return R - permute(R, "yxz")


def random_symmetric_last_pair(dim: int, rng: np.random.Generator) -> np.ndarray:
    """(0,3) array symmetric in its last two slots."""
    Q = rng.normal(size=(dim, dim, dim))
    return 0.5 * (Q + permute(Q, "xzy"))


def random_totally_skew(dim: int, rng: np.random.Generator) -> np.ndarray:
    R = rng.normal(size=(dim, dim, dim))
    return (
        R
        + permute(R, "yzx")
        + permute(R, "zxy")
        - permute(R, "yxz")
        - permute(R, "xzy")
        - permute(R, "zyx")
    ) / 6.0
