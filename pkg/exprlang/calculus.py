"""
Symbolic differentiation and compiled evaluation of expressions.

Derivatives are built with constant-folding constructors; no other
simplification is attempted.
"""

import math
from functools import singledispatch
from typing import Callable, Sequence

from shared.errors import EvaluationError

from .nodes import Binary, Const, Expr, Pow, Unary, Var

ZERO = Const(0.0)
ONE = Const(1.0)


def _is_const(e: Expr, value=None) -> bool:
    return isinstance(e, Const) and (value is None or e.value == value)


def add(a: Expr, b: Expr) -> Expr:
    if _is_const(a, 0.0):
        return b
    if _is_const(b, 0.0):
        return a
    if _is_const(a) and _is_const(b):
        return Const(a.value + b.value)
    return Binary("+", a, b)


def sub(a: Expr, b: Expr) -> Expr:
    if _is_const(b, 0.0):
        return a
    if _is_const(a, 0.0):
        return neg(b)
    if _is_const(a) and _is_const(b):
        return Const(a.value - b.value)
    return Binary("-", a, b)


def mul(a: Expr, b: Expr) -> Expr:
    if _is_const(a, 0.0) or _is_const(b, 0.0):
        return ZERO
    if _is_const(a, 1.0):
        return b
    if _is_const(b, 1.0):
        return a
    if _is_const(a) and _is_const(b):
        return Const(a.value * b.value)
    return Binary("*", a, b)


def div(a: Expr, b: Expr) -> Expr:
    if _is_const(b, 1.0):
        return a
    if _is_const(a, 0.0) and not _is_const(b, 0.0):
        return ZERO
    if _is_const(a) and _is_const(b) and b.value != 0.0:
        return Const(a.value / b.value)
    return Binary("/", a, b)


def neg(a: Expr) -> Expr:
    if _is_const(a):
        return Const(-a.value)
    return Unary("neg", a)


def power(a: Expr, n: int) -> Expr:
    if n == 0:
        return ONE
    if n == 1:
        return a
    if _is_const(a) and not (a.value == 0.0 and n < 0):
        return Const(a.value**n)
    return Pow(a, n)


def func(op: str, a: Expr) -> Expr:
    return Unary(op, a)


@singledispatch
def differentiate(e: Expr, coord: str) -> Expr:
    """Exact partial derivative of e with respect to coord."""
    raise TypeError(f"cannot differentiate {type(e).__name__}")


@differentiate.register
def _(e: Const, coord: str) -> Expr:
    return ZERO


@differentiate.register
def _(e: Var, coord: str) -> Expr:
    return ONE if e.name == coord else ZERO


@differentiate.register
def _(e: Binary, coord: str) -> Expr:
    dl = differentiate(e.left, coord)
    dr = differentiate(e.right, coord)
    if e.op == "+":
        return add(dl, dr)
    if e.op == "-":
        return sub(dl, dr)
    if e.op == "*":
        return add(mul(dl, e.right), mul(e.left, dr))
    # quotient rule
    numerator = sub(mul(dl, e.right), mul(e.left, dr))
    if _is_const(numerator, 0.0):
        return ZERO
    return div(numerator, power(e.right, 2))


@differentiate.register
def _(e: Pow, coord: str) -> Expr:
    da = differentiate(e.base, coord)
    if _is_const(da, 0.0) or e.exponent == 0:
        return ZERO
    return mul(mul(Const(float(e.exponent)), power(e.base, e.exponent - 1)), da)


@differentiate.register
def _(e: Unary, coord: str) -> Expr:
    da = differentiate(e.arg, coord)
    if _is_const(da, 0.0):
        return ZERO
    a = e.arg
    if e.op == "neg":
        return neg(da)
    if e.op == "sin":
        return mul(func("cos", a), da)
    if e.op == "cos":
        return neg(mul(func("sin", a), da))
    if e.op == "exp":
        return mul(func("exp", a), da)
    if e.op == "log":
        return div(da, a)
    if e.op == "sqrt":
        return div(da, mul(Const(2.0), func("sqrt", a)))
    # atan
    return div(da, add(ONE, power(a, 2)))


# Compilation to closures over a coordinate vector


def _safe_div(node):
    def op(x, y):
        if y == 0.0:
            raise EvaluationError(node, "division by zero")
        return x / y

    return op


def _checked(node, fn, ok, reason):
    def op(x):
        if not ok(x):
            raise EvaluationError(node, reason)
        try:
            return fn(x)
        except (OverflowError, ValueError) as exc:
            raise EvaluationError(node, str(exc)) from exc

    return op


@singledispatch
def _compile(e: Expr, index: dict) -> Callable[[Sequence[float]], float]:
    raise TypeError(f"cannot compile {type(e).__name__}")


@_compile.register
def _(e: Const, index: dict):
    value = float(e.value)
    return lambda x: value


@_compile.register
def _(e: Var, index: dict):
    try:
        i = index[e.name]
    except KeyError:
        raise EvaluationError(e, f"unknown coordinate {e.name!r}") from None
    return lambda x: x[i]


@_compile.register
def _(e: Binary, index: dict):
    left = _compile(e.left, index)
    right = _compile(e.right, index)
    if e.op == "+":
        return lambda x: left(x) + right(x)
    if e.op == "-":
        return lambda x: left(x) - right(x)
    if e.op == "*":
        return lambda x: left(x) * right(x)
    divide = _safe_div(e)
    return lambda x: divide(left(x), right(x))


def _power(node, n: int):
    def op(x):
        try:
            value = x**n
        except OverflowError as exc:
            raise EvaluationError(node, "overflow in power") from exc
        return value

    return op


@_compile.register
def _(e: Pow, index: dict):
    base = _compile(e.base, index)
    n = e.exponent
    raise_to = _power(e, abs(n))
    if n >= 0:
        return lambda x: raise_to(base(x))
    divide = _safe_div(e)
    return lambda x: divide(1.0, raise_to(base(x)))


_UNARY = {
    "sin": (math.sin, lambda v: True, ""),
    "cos": (math.cos, lambda v: True, ""),
    "atan": (math.atan, lambda v: True, ""),
    "exp": (math.exp, lambda v: True, ""),
    "log": (math.log, lambda v: v > 0.0, "log of non-positive value"),
    "sqrt": (math.sqrt, lambda v: v >= 0.0, "sqrt of negative value"),
}


@_compile.register
def _(e: Unary, index: dict):
    arg = _compile(e.arg, index)
    if e.op == "neg":
        return lambda x: -arg(x)
    fn, ok, reason = _UNARY[e.op]
    op = _checked(e, fn, ok, reason)
    return lambda x: op(arg(x))


def compile_expr(e: Expr, coords: Sequence[str]) -> Callable[[Sequence[float]], float]:
    """Compile e into a function of the coordinate vector ordered as coords."""
    inner = _compile(e, {name: i for i, name in enumerate(coords)})

    def run(x):
        value = inner(x)
        if not math.isfinite(value):
            raise EvaluationError(e, "non-finite result")
        return value

    return run


def evaluate(e: Expr, p, coords: Sequence[str] = None) -> float:
    """Evaluate e at point p.

    p is either a mapping from coordinate name to value, or a coordinate
    sequence together with coords (names or a Chart).
    """
    if isinstance(p, dict):
        coords = list(p)
        p = [p[c] for c in coords]
    if coords is None:
        raise ValueError("coordinate names are required for positional points")
    coords = getattr(coords, "coords", coords)
    if len(p) != len(coords):
        raise ValueError(f"point has {len(p)} coordinates, chart has {len(coords)}")
    return compile_expr(e, coords)([float(v) for v in p])
