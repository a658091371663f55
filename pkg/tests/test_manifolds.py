import numpy as np
import pytest
from numpy.testing import assert_allclose

from manifolds import (
    BUILTINS,
    builtin,
    builtin_names,
    cross,
    cross_matrix,
    random_generalized_metric,
    sphere_endomorphism,
    sphere_endomorphism_jet,
    sphere_point,
)
from shared.errors import NgtLabError
from tensor import central_difference


def test_cross_product_is_a_seven_dimensional_cross_product(rng):
    for _ in range(10):
        u, v = rng.normal(size=7), rng.normal(size=7)
        w = cross(u, v)
        assert_allclose(w @ u, 0.0, atol=1e-12)
        assert_allclose(w @ v, 0.0, atol=1e-12)
        assert_allclose(w @ w, (u @ u) * (v @ v) - (u @ v) ** 2, rtol=1e-10)
        assert_allclose(cross_matrix(u) @ v, w)


def test_sphere_endomorphism_is_orthogonal_complex_structure(rng):
    for _ in range(5):
        u = rng.uniform(-0.8, 0.8, size=6)
        p = sphere_point(u)
        assert_allclose(p @ p, 1.0)
        A = sphere_endomorphism(u)
        assert_allclose(A @ A, -np.eye(6), atol=1e-12)
        assert_allclose(A.T @ A, np.eye(6), atol=1e-12)


def test_sphere_endomorphism_jet_matches_finite_differences(rng):
    u = rng.uniform(-0.5, 0.5, size=6)
    A, dA = sphere_endomorphism_jet(u)
    assert_allclose(A, sphere_endomorphism(u))
    assert_allclose(dA, central_difference(sphere_endomorphism, u), atol=1e-7)


def test_builtin_lookup():
    assert builtin_names() == sorted(BUILTINS)
    assert builtin("flat-kahler-6").chart.dim == 6
    assert builtin("flat-para-kahler-8").chart.dim == 8
    assert builtin("flat-kahler-times-line-7").has_contact
    with pytest.raises(NgtLabError):
        builtin("flat-kahler-5")
    with pytest.raises(NgtLabError):
        builtin("no-such-manifold")


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_builtins_evaluate(name):
    manifold = builtin(name)
    assert manifold.name == name
    for p in manifold.chart.sample(2, seed=0):
        frame = manifold.frame(p)
        assert np.all(np.isfinite(frame.dA))
        assert_allclose(frame.F, frame.A.T @ frame.g, atol=1e-12)


def test_random_metric_is_reproducible():
    first = random_generalized_metric(4, seed=9)
    second = random_generalized_metric(4, seed=9)
    p = first.chart.sample(1, seed=0)[0]
    assert_allclose(first.frame(p).G, second.frame(p).G)
    assert first.is_symbolic
