"""
Expression language for ngtlab fields.
Parses coordinate expressions, differentiates them exactly and evaluates them fast.
"""

from .nodes import (
    FUNCTIONS,
    Binary,
    Const,
    Expr,
    Pow,
    Unary,
    Var,
    to_text,
    variables,
)
from .parser import parse, tokenize
from .calculus import compile_expr, differentiate, evaluate

__all__ = [
    # Nodes
    "Expr",
    "Const",
    "Var",
    "Unary",
    "Binary",
    "Pow",
    "FUNCTIONS",
    "to_text",
    "variables",
    # Parsing
    "parse",
    "tokenize",
    # Calculus
    "differentiate",
    "evaluate",
    "compile_expr",
]
