import numpy as np
import pytest
from numpy.testing import assert_allclose

from geometry import (
    connection_from_torsion_and_nabla_g,
    covariant_residuals,
    cyclic_dF_identity_residual,
    eisenhart_connection,
    eisenhart_nijenhuis_residual,
    induced_nabla_F,
    levi_civita,
    metric_connection_compat,
    nabla_F,
    nabla_g,
    nijenhuis,
    nijenhuis_lowered,
    nijenhuis_via_nabla_a,
    skew_torsion_existence,
)
from manifolds import random_skew_first_pair, random_symmetric_last_pair, random_totally_skew
from shared.errors import ShapeError
from shared.utils import max_abs
from structures import hermitian_skew_torsion
from tensor import d_two_form, torsion

TOL = 1e-8
STRICT = 1e-9
REJECT = 1e-3


def test_levi_civita_is_torsion_free_and_metric(random_frames):
    for frame in random_frames:
        gamma = levi_civita(frame)
        assert max_abs(torsion(gamma, frame.g)[1]) <= STRICT
        assert max_abs(nabla_g(gamma, frame)) <= STRICT


def test_prescribed_torsion_and_nabla_g_round_trip(random_frames, rng):
    for frame in random_frames:
        T = random_skew_first_pair(frame.dim, rng)
        Q = random_symmetric_last_pair(frame.dim, rng)
        gamma = connection_from_torsion_and_nabla_g(T, Q, frame)
        assert_allclose(torsion(gamma, frame.g)[1], T, atol=TOL)
        assert_allclose(nabla_g(gamma, frame), Q, atol=TOL)
        # nabla F predicted from (T, Q) alone
        assert_allclose(induced_nabla_F(T, Q, frame), nabla_F(gamma, frame), atol=TOL)


def test_prescribed_inputs_must_have_the_right_symmetry(random_frames, rng):
    frame = random_frames[0]
    n = frame.dim
    with pytest.raises(ShapeError):
        connection_from_torsion_and_nabla_g(rng.normal(size=(n, n, n)), np.zeros((n, n, n)), frame)
    with pytest.raises(ShapeError):
        connection_from_torsion_and_nabla_g(np.zeros((n, n, n)), rng.normal(size=(n, n, n)), frame)


def test_cyclic_dF_identity_holds_for_every_connection(random_frames, rng):
    for frame in random_frames:
        n = frame.dim
        gamma = rng.normal(size=(n, n, n))
        assert cyclic_dF_identity_residual(gamma, frame) <= TOL
        assert cyclic_dF_identity_residual(levi_civita(frame), frame) <= TOL


def test_eisenhart_connection(random_frames):
    for frame in random_frames:
        gamma = eisenhart_connection(frame)
        assert_allclose(torsion(gamma, frame.g)[1], d_two_form(frame.dF), atol=1e-12)
        assert max_abs(nabla_g(gamma, frame)) <= STRICT
        assert eisenhart_nijenhuis_residual(frame) <= TOL


def test_nijenhuis_is_skew_and_matches_nabla_a_form(random_frames, rng):
    for frame in random_frames:
        n12, N = nijenhuis(frame)
        assert_allclose(n12, -np.transpose(n12, (0, 2, 1)), atol=1e-12)
        assert_allclose(N, nijenhuis_lowered(frame))
        gamma = connection_from_torsion_and_nabla_g(
            random_skew_first_pair(frame.dim, rng), random_symmetric_last_pair(frame.dim, rng), frame
        )
        assert_allclose(nijenhuis_via_nabla_a(gamma, frame), N, atol=TOL)


def test_metric_connection_for_flat_kahler(builtin_frames):
    for frame in builtin_frames("flat-kahler-4", 4):
        result = metric_connection_compat(np.zeros((4, 4, 4)), frame)
        assert result.residual <= TOL
        assert result.nabla_g <= TOL and result.nabla_F <= TOL


def test_metric_connection_for_the_six_sphere(s6_frames):
    for frame in s6_frames:
        T = hermitian_skew_torsion(frame).torsion
        result = metric_connection_compat(T, frame)
        assert result.residual <= TOL
        assert result.cyclic_residual <= TOL
        found = covariant_residuals(result.gamma, frame)
        assert max(found.nabla_g, found.nabla_F, found.nabla_G) <= TOL


def test_random_skew_torsion_does_not_preserve_f(random_frames, rng):
    worst = 0.0
    for frame in random_frames[:10]:
        for _ in range(5):
            result = metric_connection_compat(random_totally_skew(frame.dim, rng), frame)
            assert result.nabla_g <= TOL
            worst = max(worst, result.nabla_F)
    assert worst >= REJECT


def test_skew_torsion_existence_on_the_six_sphere(s6_frames):
    for frame in s6_frames:
        result = skew_torsion_existence(frame)
        assert result.exists
        assert result.image_of_a <= TOL
        assert result.nabla_a_form <= TOL
        assert_allclose(result.torsion, hermitian_skew_torsion(frame).torsion, atol=TOL)
