import logging

import numpy as np
import pytest
from numpy.testing import assert_allclose

from geometry import connection_from_lowered, cyclic_sum, levi_civita, nabla_F, nabla_g
from manifolds import random_skew_first_pair, random_totally_skew
from ngt import (
    AGREE,
    ERRATUM,
    admissible_torsion,
    closed_form_guard,
    decomposition_nabla_g,
    cyclic_torsion_residual,
    einstein_metricity_coordinate,
    einstein_metricity_residual,
    ngt_connection,
    ngt_general_decomposition,
    ngt_skew_condition_residual,
    ngt_skew_pipeline,
    ngt_torsion,
)
from shared.errors import ConstraintError, ShapeError
from shared.utils import max_abs
from tensor import compose_slots, permute, torsion

TOL = 1e-8


def test_admissible_torsion_satisfies_the_cyclic_constraint(random_frames, rng):
    for frame in random_frames:
        T = admissible_torsion(random_skew_first_pair(frame.dim, rng), frame)
        assert_allclose(T, -permute(T, "yxz"), atol=1e-12)
        assert cyclic_torsion_residual(T, frame) <= TOL


def test_closed_form_guard_on_random_triples(random_frames, rng, caplog):
    branches = set()
    with caplog.at_level(logging.WARNING):
        for frame in random_frames:
            T = admissible_torsion(random_skew_first_pair(frame.dim, rng), frame)
            # nabla g has no cyclic part
            assert max_abs(cyclic_sum(decomposition_nabla_g(T, frame.A))) <= TOL
            guard = closed_form_guard(T, frame)
            branches.add(guard.branch)
            if guard.branch == AGREE:
                assert guard.residual <= TOL
    assert branches <= {AGREE, ERRATUM}
    if ERRATUM in branches:
        assert "[ERRATUM]" in caplog.text


def test_decomposition_with_the_ngt_torsion(s6_frames, builtin_frames):
    for frame in s6_frames + builtin_frames("flat-kahler-4", 1):
        result = ngt_general_decomposition(ngt_torsion(frame), frame)
        for name, value in result.residuals.items():
            assert value <= TOL, name
        pipeline = ngt_skew_pipeline(frame)
        assert_allclose(result.nabla_F, pipeline.nabla_F, atol=TOL)
        assert_allclose(result.nabla_g, pipeline.nabla_g, atol=TOL)
        assert_allclose(result.gamma, pipeline.gamma, atol=TOL)


def test_other_admissible_torsions_break_metricity(builtin_frames, rng):
    worst = 0.0
    for frame in builtin_frames("flat-kahler-4", 4):
        T = admissible_torsion(random_skew_first_pair(frame.dim, rng), frame)
        worst = max(worst, ngt_general_decomposition(T, frame).metricity)
    assert worst >= 1e-3


def test_guard_reports_a_branch(random_frames, rng):
    frame = random_frames[0]
    T = admissible_torsion(random_skew_first_pair(frame.dim, rng), frame)
    guard = closed_form_guard(T, frame)
    assert guard.branch in (AGREE, ERRATUM)
    assert guard.residual >= 0.0


def test_decomposition_rejects_inadmissible_torsion(random_frames, rng):
    frame = random_frames[1]
    with pytest.raises(ConstraintError):
        ngt_general_decomposition(random_skew_first_pair(frame.dim, rng), frame)
    symmetric = rng.normal(size=(frame.dim,) * 3)
    with pytest.raises(ShapeError):
        ngt_general_decomposition(symmetric + permute(symmetric, "yxz"), frame)
    with pytest.raises(ShapeError):
        ngt_general_decomposition(np.zeros((2, 2, 2)), frame)


def test_einstein_metricity_coordinate_form_matches(random_frames):
    frame = random_frames[2]
    gamma = levi_civita(frame)
    assert einstein_metricity_residual(gamma, frame) == pytest.approx(
        max_abs(einstein_metricity_coordinate(gamma, frame)), abs=1e-12
    )


def test_skew_pipeline_on_the_six_sphere(s6_frames):
    for frame in s6_frames:
        result = ngt_skew_pipeline(frame)
        assert result.condition_residual <= TOL
        assert result.exists and result.verified
        for name, value in result.checks.items():
            assert value <= TOL, name
        assert_allclose(result.torsion, -frame.exterior_dF / 3.0, atol=1e-12)
        _, found = torsion(ngt_connection(frame), frame.g)
        assert_allclose(found, ngt_torsion(frame), atol=TOL)


def test_six_sphere_ngt_torsion_differs_from_the_g_preserving_one(s6_frames):
    frame = s6_frames[0]
    A = frame.A
    preserving = compose_slots(frame.exterior_dF, {0: A}) / 3.0
    assert max_abs(ngt_torsion(frame) - preserving) >= 1e-3
    # on S^6 the NGT connection preserves g but not F
    gamma = ngt_connection(frame)
    assert max_abs(nabla_g(gamma, frame)) <= TOL
    assert max_abs(nabla_F(gamma, frame)) >= 1e-3


def test_skew_condition_fails_on_a_deformed_hermitian_structure(builtin_frames):
    residuals = [ngt_skew_condition_residual(f) for f in builtin_frames("deformed-hermitian-r4", 16)]
    assert max(residuals) >= 1e-3
    result = ngt_skew_pipeline(builtin_frames("deformed-hermitian-r4", 16)[int(np.argmax(residuals))])
    assert not result.exists
    assert result.torsion is None and result.checks == {}


def test_skew_perturbations_break_metricity(s6_frames, rng):
    frame = s6_frames[3]
    gamma = ngt_connection(frame)
    assert einstein_metricity_residual(gamma, frame) <= TOL
    for _ in range(3):
        K = random_totally_skew(frame.dim, rng)
        delta = connection_from_lowered(K, frame)
        small = einstein_metricity_residual(gamma + 1e-4 * delta, frame)
        large = einstein_metricity_residual(gamma + 1e-2 * delta, frame)
        assert small > 0.0
        assert large == pytest.approx(100.0 * small, rel=1e-3)
