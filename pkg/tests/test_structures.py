import numpy as np
import pytest
from numpy.testing import assert_allclose

from geometry import nijenhuis_lowered
from manifolds import BUILTINS, builtin
from ngt import ngt_torsion
from shared.errors import StructureError
from shared.utils import max_abs
from structures import (
    StructureKind,
    aggregate,
    almost_nearly_cosymplectic_residual,
    classify,
    classify_frames,
    contact_ngt_point,
    contact_skew_torsion,
    hermitian_ngt_equivalence,
    hermitian_ngt_point,
    hermitian_skew_torsion,
    para_hermitian_ngt_point,
    para_hermitian_skew_torsion,
    paracontact_ngt_point,
    paracontact_skew_torsion,
    total_skew_residual,
    wedge,
)
from tensor import Chart, GeneralizedMetric, compose_slots, constant_field, skew_residual

TOL = 1e-8
REJECT = 1e-3


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_builtins_classify_as_catalogued(name):
    manifold = builtin(name)
    points = manifold.chart.sample(6, seed=1)
    assert classify(manifold, points) == BUILTINS[name].kind


def test_random_metric_is_generic(random_frames):
    assert classify_frames(random_frames[:5]) == StructureKind.GENERIC


def test_eta_of_xi_must_be_one():
    chart = Chart(("x", "y", "t"))
    A = np.zeros((3, 3))
    A[1, 0], A[0, 1] = 1.0, -1.0
    manifold = GeneralizedMetric(
        constant_field(chart, np.eye(3), (0, 2), "symmetric"),
        A=constant_field(chart, A, (1, 1)),
        eta=constant_field(chart, [0.0, 0.0, 1.0], (0, 1)),
        xi=constant_field(chart, [0.0, 0.0, 2.0], (1, 0)),
    )
    with pytest.raises(StructureError):
        classify(manifold, chart.sample(2, seed=0))


def test_wedge_uses_the_cyclic_convention():
    b = np.zeros((3, 3))
    b[0, 1], b[1, 0] = 1.0, -1.0
    e3 = np.array([0.0, 0.0, 1.0])
    w = wedge(b, e3)
    assert w[0, 1, 2] == pytest.approx(1.0)
    assert w[2, 0, 1] == pytest.approx(1.0)
    assert skew_residual(w) == pytest.approx(0.0)
    assert max_abs(wedge(b, np.array([1.0, 0.0, 0.0]))) == pytest.approx(0.0)


def test_hermitian_corollary_on_the_six_sphere(s6_frames):
    for frame in s6_frames:
        result = hermitian_skew_torsion(frame)
        assert result.holds and result.verified
        N = nijenhuis_lowered(frame)
        assert_allclose(result.torsion, N / 4.0, atol=TOL)
        assert_allclose(result.torsion, compose_slots(frame.exterior_dF, {0: frame.A}) / 3.0, atol=TOL)
        # the G-preserving torsion is not the NGT torsion -dF/3
        assert max_abs(result.torsion - ngt_torsion(frame)) >= REJECT


def test_hermitian_corollary_fails_without_total_skew_nijenhuis(builtin_frames):
    results = [hermitian_skew_torsion(f) for f in builtin_frames("deformed-hermitian-r4", 16)]
    assert max(r.condition_residual for r in results) >= REJECT
    assert all(r.checks == {} for r in results if not r.holds)


def test_nearly_kahler_equivalence_on_the_six_sphere(s6_frames):
    report = hermitian_ngt_equivalence(s6_frames)
    assert report.consistent
    assert report.skew_condition.holds
    assert report.nearly_kahler <= TOL
    for name, value in report.checks.items():
        assert value <= TOL, name
    for name in ("dF_type", "nijenhuis_dF", "torsion_nijenhuis", "nabla_g_zero"):
        assert name in report.checks


def test_nearly_kahler_equivalence_rejects_the_deformed_structure(builtin_frames):
    report = hermitian_ngt_equivalence(builtin_frames("deformed-hermitian-r4", 16))
    assert report.skew_condition.condition_residual >= REJECT
    assert report.nearly_kahler >= REJECT
    assert report.consistent


@pytest.mark.parametrize("name", ["s6-nearly-kahler", "deformed-hermitian-r4", "flat-kahler-2", "flat-kahler-4"])
def test_no_catalog_input_is_one_sided(name, builtin_frames):
    assert hermitian_ngt_equivalence(builtin_frames(name)).one_sided_points == 0


def test_flat_kahler_is_trivially_nearly_kahler(builtin_frames):
    for frame in builtin_frames("flat-kahler-4", 1):
        result = hermitian_ngt_point(frame)
        assert result.holds and result.verified
        assert result.info["nearly_kahler"] <= TOL


@pytest.mark.parametrize("name", ["flat-para-kahler-2", "flat-para-kahler-4"])
def test_para_hermitian_theorems_on_flat_inputs(name, builtin_frames):
    for frame in builtin_frames(name, 4):
        corollary = para_hermitian_skew_torsion(frame)
        assert corollary.holds and corollary.verified
        ngt = para_hermitian_ngt_point(frame)
        assert ngt.holds and ngt.verified
        assert "nabla_g_zero" in ngt.checks


def test_contact_ngt_on_nearly_kahler_times_line(builtin_frames):
    frames = builtin_frames("nk-times-line", 12)
    for frame in frames:
        result = contact_ngt_point(frame)
        assert result.holds, result.condition_residual
        assert result.verified
        for name, value in result.checks.items():
            assert value <= TOL, name
    summary = aggregate(contact_ngt_point(f) for f in frames)
    for name in (
        "torsion_nijenhuis",
        "nabla_eta_dF",
        "dF_xi",
        "nabla_eta_half_deta",
        "nijenhuis_xi",
        "nijenhuis_dF",
        "dF_eta_deta",
        "levi_civita_nabla_A",
        "killing",
        "closed_eta_parallel",
    ):
        assert name in summary.checks


def test_contact_corollary_on_nearly_kahler_times_line(builtin_frames):
    for frame in builtin_frames("nk-times-line", 6):
        result = contact_skew_torsion(frame)
        assert result.holds and result.verified
        assert result.info["killing"] <= TOL
        assert result.info["image_form"] <= TOL
        assert result.info["nac_form"] <= TOL
        assert total_skew_residual(result.torsion) <= TOL


def test_contact_r3_is_never_almost_nearly_cosymplectic(builtin_frames):
    residuals = [almost_nearly_cosymplectic_residual(f) for f in builtin_frames("contact-r3", 16)]
    assert max(residuals) >= 1e-2
    assert not any(contact_ngt_point(f).holds for f in builtin_frames("contact-r3", 16))


@pytest.mark.parametrize("name", ["flat-kahler-times-line-3", "flat-kahler-times-line-5"])
def test_flat_cosymplectic_inputs(name, builtin_frames):
    for frame in builtin_frames(name, 3):
        result = contact_ngt_point(frame)
        assert result.holds and result.verified
        assert "normal_cosymplectic" in result.checks


def test_paracontact_theorems_on_the_product_line(builtin_frames):
    for frame in builtin_frames("para-product-line", 6):
        result = paracontact_ngt_point(frame)
        assert result.holds and result.verified
        for name in ("deta_from_dF", "skew_condition_paracontact", "nijenhuis_image", "nijenhuis_xi"):
            assert result.checks[name] <= TOL
        corollary = paracontact_skew_torsion(frame)
        assert corollary.holds and corollary.verified
