"""
Coordinate charts and deterministic point sampling.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from shared.errors import ShapeError

# A point is a float vector of length chart.dim.
Point = np.ndarray


@dataclass(frozen=True)
class Chart:
    """A coordinate patch: ordered names, a sampling box and an optional predicate."""

    coords: Tuple[str, ...]
    bounds: Tuple[Tuple[float, float], ...] = ()
    predicate: Optional[Callable[[np.ndarray], bool]] = field(
        default=None, compare=False
    )

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, "coords", coords)
        if not coords:
            raise ShapeError("a chart needs at least one coordinate")
        if len(set(coords)) != len(coords):
            raise ShapeError(f"coordinate names must be distinct: {coords}")
        bounds = tuple(tuple(map(float, b)) for b in self.bounds) or tuple(
            (-1.0, 1.0) for _ in coords
        )
        if len(bounds) != len(coords):
            raise ShapeError("one (low, high) pair is needed per coordinate")
        object.__setattr__(self, "bounds", bounds)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def contains(self, p: Sequence[float]) -> bool:
        p = np.asarray(p, dtype=float)
        if p.shape != (self.dim,) or not np.all(np.isfinite(p)):
            return False
        return self.predicate is None or bool(self.predicate(p))

    def point(self, values: Sequence[float]) -> Point:
        """Validated point of this chart."""
        p = np.asarray(values, dtype=float)
        if p.shape != (self.dim,):
            raise ShapeError(f"expected {self.dim} coordinates, got shape {p.shape}")
        if not self.contains(p):
            raise ShapeError(f"point {p.tolist()} is outside the chart domain")
        return p

    def sample(self, count: int, seed: int, max_attempts: int = 100) -> np.ndarray:
        """count points drawn uniformly from the box, same output for the same seed."""
        rng = np.random.default_rng(seed)
        low = np.array([b[0] for b in self.bounds])
        high = np.array([b[1] for b in self.bounds])
        points = []
        attempts = 0
        while len(points) < count:
            candidate = rng.uniform(low, high)
            attempts += 1
            if self.contains(candidate):
                points.append(candidate)
            elif attempts > max_attempts * max(count, 1):
                raise ShapeError("domain predicate rejects almost every sampled point")
        return np.array(points).reshape(count, self.dim)

    def probe_points(self, count: int) -> np.ndarray:
        """Box centre followed by seeded samples, used to validate fields."""
        centre = np.array([(lo + hi) / 2.0 for lo, hi in self.bounds])
        points = [centre] if self.contains(centre) else []
        if count > len(points):
            points.extend(self.sample(count - len(points), seed=0))
        return np.array(points[:count])
