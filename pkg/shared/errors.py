"""
Exception hierarchy shared by every ngtlab package.
"""

from typing import Any, FrozenSet, Optional


class NgtLabError(Exception):
    """Base class for all ngtlab errors."""


class ParseError(NgtLabError, ValueError):
    """Expression text could not be parsed."""

    def __init__(
        self, offset: int, message: str, expected: FrozenSet[str] = frozenset()
    ):
        self.offset = offset
        self.message = message
        self.expected = frozenset(expected)
        detail = f" (expected one of: {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"offset {offset}: {message}{detail}")


class EvaluationError(NgtLabError, ArithmeticError):
    """Domain error while evaluating an expression node."""

    def __init__(self, node: Any, reason: str):
        self.node = node
        self.reason = reason
        super().__init__(f"{reason} at node {node!r}")


class SingularMetricError(NgtLabError):
    """The symmetric part g is degenerate or too ill-conditioned to invert."""


class SingularEndomorphismError(NgtLabError):
    """A is not invertible where a construction needs its inverse."""


class ShapeError(NgtLabError, ValueError):
    """Wrong valence, shape or declared symmetry."""


class StructureError(NgtLabError):
    """Inconsistent structure data, e.g. eta(xi) != 1."""


class SpecFileError(NgtLabError, ValueError):
    """Problem in a manifold spec file."""

    def __init__(self, path: str, message: str, line: Optional[int] = None):
        self.path = path
        self.line = line
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: {message}")


class ConstraintError(NgtLabError):
    """Input violates a necessary condition of a construction."""
