import math

import numpy as np
import pytest

from exprlang import (
    Binary,
    Const,
    Pow,
    Unary,
    Var,
    compile_expr,
    differentiate,
    evaluate,
    parse,
    to_text,
    variables,
)
from manifolds import random_expression
from shared.errors import EvaluationError, ParseError

COORDS = ("x", "y", "z")
ROUND_TRIPS = 1000
FD_RELATIVE = 1e-5


def test_precedence_and_associativity():
    x, y, z = Var("x"), Var("y"), Var("z")
    assert parse("x + y*z", COORDS) == Binary("+", x, Binary("*", y, z))
    assert parse("x - y - z", COORDS) == Binary("-", Binary("-", x, y), z)
    assert parse("x / y * z", COORDS) == Binary("*", Binary("/", x, y), z)
    assert parse("-x^2", COORDS) == Unary("neg", Pow(x, 2))
    assert parse("x^-2", COORDS) == Pow(x, -2)
    assert parse("sin(x)^2", COORDS) == Pow(Unary("sin", x), 2)
    assert parse("2.5e-1", COORDS) == Const(0.25)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("x +", 3),
        ("x + w", 4),
        ("(x + y", 6),
        ("x + y)", 5),
        ("x^1.5", 2),
        ("x $ y", 2),
        ("sin x", 4),
        ("1e999 + x", 0),
        ("x * 2e400", 4),
    ],
)
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text, COORDS)
    assert info.value.offset == offset
    assert info.value.offset <= len(text)


def test_unknown_identifier_lists_coordinates():
    with pytest.raises(ParseError) as info:
        parse("q", COORDS)
    assert info.value.expected == frozenset(COORDS)


def test_exact_derivatives():
    e = parse("x*y + sin(z)^2", COORDS)
    point = {"x": 0.3, "y": -1.2, "z": 0.7}
    assert evaluate(differentiate(e, "x"), point) == pytest.approx(-1.2)
    assert evaluate(differentiate(e, "y"), point) == pytest.approx(0.3)
    assert evaluate(differentiate(e, "z"), point) == pytest.approx(math.sin(1.4))
    assert differentiate(parse("y^3", COORDS), "x") == Const(0.0)


@pytest.mark.parametrize(
    "text, point",
    [
        ("log(x)", [-1.0, 0.0, 0.0]),
        ("sqrt(x)", [-0.5, 0.0, 0.0]),
        ("1/x", [0.0, 1.0, 1.0]),
        ("y*x^-1", [0.0, 1.0, 1.0]),
        ("x^400", [1e10, 0.0, 0.0]),
        ("x^-3", [1e-200, 0.0, 0.0]),
    ],
)
def test_domain_errors(text, point):
    with pytest.raises(EvaluationError):
        compile_expr(parse(text, COORDS), COORDS)(point)


def test_variables():
    assert variables(parse("x*exp(z) + 3", COORDS)) == frozenset({"x", "z"})


def test_print_parse_round_trip_is_exact():
    rng = np.random.default_rng(0)
    for _ in range(ROUND_TRIPS):
        e = random_expression(COORDS, rng)
        assert parse(to_text(e), COORDS) == e


def _central(fn, x, i, h):
    up, down = np.array(x), np.array(x)
    up[i] += h
    down[i] -= h
    return (fn(up) - fn(down)) / (2.0 * h)


def test_symbolic_derivatives_match_finite_differences():
    rng = np.random.default_rng(1)
    compared = 0
    for _ in range(ROUND_TRIPS):
        e = random_expression(COORDS, rng)
        x = rng.uniform(0.2, 1.5, size=3)
        i = int(rng.integers(3))
        fn = compile_expr(e, COORDS)
        try:
            exact = compile_expr(differentiate(e, COORDS[i]), COORDS)(x)
            coarse = _central(fn, x, i, 1e-4)
            fine = _central(fn, x, i, 5e-5)
        except (EvaluationError, OverflowError):
            continue
        scale = max(1.0, abs(exact))
        # skip points where the difference quotient has not converged
        if abs(coarse - fine) > 1e-7 * scale:
            continue
        assert abs(exact - fine) <= FD_RELATIVE * scale, to_text(e)
        compared += 1
    assert compared > ROUND_TRIPS // 4
