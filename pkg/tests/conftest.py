"""Shared fixtures: seeded generators, random generalized metrics and builtin frames."""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from manifolds import builtin, random_generalized_metric  # noqa: E402


def frames_of(manifold, count: int, seed: int):
    return [manifold.frame(p) for p in manifold.chart.sample(count, seed)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def random_frames():
    """Frames of random polynomial (g, F) in dimensions 3 to 5, five points each."""
    frames = []
    for seed in range(12):
        dim = 3 + seed % 3
        frames.extend(frames_of(random_generalized_metric(dim, seed), 5, seed))
    return frames


@pytest.fixture(scope="session")
def s6_frames():
    return frames_of(builtin("s6-nearly-kahler"), 20, 7)


@pytest.fixture(scope="session")
def builtin_frames():
    """Frames per builtin name, evaluated on first use."""
    cache = {}

    def get(name: str, count: int = 8, seed: int = 3):
        key = (name, count, seed)
        if key not in cache:
            cache[key] = frames_of(builtin(name), count, seed)
        return cache[key]

    return get
