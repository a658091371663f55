"""
Result containers shared by the structure theorems.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np


@dataclass(frozen=True)
class ConditionalResult:
    """A precondition residual plus the checks that only make sense when it holds.

    checks are filled only when the condition holds; info carries diagnostics
    that are reported but never decide a verdict.
    """

    condition: str
    condition_residual: float
    tolerance: float
    checks: Dict[str, float] = field(default_factory=dict)
    info: Dict[str, float] = field(default_factory=dict)
    torsion: Optional[np.ndarray] = None
    gamma: Optional[np.ndarray] = None

    @property
    def holds(self) -> bool:
        return bool(np.isfinite(self.condition_residual)) and self.condition_residual <= self.tolerance

    @property
    def verified(self) -> bool:
        return self.holds and all(value <= self.tolerance for value in self.checks.values())


@dataclass(frozen=True)
class AggregateResult:
    """Max residuals of one conditional result family over many points."""

    condition: str
    condition_residual: float
    points: int
    passing_points: int
    checks: Dict[str, float] = field(default_factory=dict)
    info: Dict[str, float] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.points > 0 and self.passing_points == self.points


def aggregate(results) -> AggregateResult:
    """Fold per-point results: checks only from points where the condition held."""
    results = list(results)
    checks: Dict[str, float] = {}
    info: Dict[str, float] = {}
    worst = 0.0
    passing = 0
    for result in results:
        worst = max(worst, result.condition_residual)
        for name, value in result.info.items():
            info[name] = max(info.get(name, 0.0), value)
        if not result.holds:
            continue
        passing += 1
        for name, value in result.checks.items():
            checks[name] = max(checks.get(name, 0.0), value)
    name = results[0].condition if results else ""
    return AggregateResult(name, worst, len(results), passing, checks, info)
