import numpy as np
import pytest
from numpy.testing import assert_allclose

from manifolds import random_generalized_metric
from shared.errors import ShapeError, SingularMetricError
from tensor import (
    ArrayField,
    CallableField,
    Chart,
    ComponentField,
    ConstantField,
    GeneralizedMetric,
    compose_slots,
    constant_field,
    contract,
    d_two_form,
    decompose,
    exterior_derivative2,
    from_expressions,
    invert_metric,
    permute,
    recover_a,
    skew_from_expressions,
)

TOL = 1e-12


def test_chart_sampling_is_deterministic():
    chart = Chart(("x", "y"), ((-1.0, 1.0), (0.0, 2.0)))
    first = chart.sample(10, seed=5)
    assert_allclose(first, chart.sample(10, seed=5))
    assert first.shape == (10, 2)
    assert np.all(first[:, 1] >= 0.0)


def test_chart_rejects_bad_points():
    chart = Chart(("x", "y"), predicate=lambda p: p[0] > 0)
    with pytest.raises(ShapeError):
        chart.point([-0.5, 0.0])
    with pytest.raises(ShapeError):
        chart.point([0.5])
    with pytest.raises(ShapeError):
        Chart(("x", "x"))


def test_exterior_derivative_uses_the_cyclic_convention():
    chart = Chart(("x1", "x2", "x3"))
    F = skew_from_expressions(chart, {(0, 1): "x3"})
    dF = exterior_derivative2(F, np.zeros(3))
    assert dF[0, 1, 2] == pytest.approx(1.0)
    assert dF[1, 2, 0] == pytest.approx(1.0)
    assert dF[1, 0, 2] == pytest.approx(-1.0)


def test_skew_from_expressions_is_exactly_skew():
    chart = Chart(("x", "y", "z"))
    F = skew_from_expressions(chart, {(0, 1): "x*y", (1, 2): "sin(z)"})
    values, partials = F.jet(np.array([0.3, 0.4, 0.5]))
    assert np.array_equal(values, -values.T)
    assert np.array_equal(partials, -np.transpose(partials, (0, 2, 1)))
    with pytest.raises(ShapeError):
        skew_from_expressions(chart, {(1, 0): "x"})


def test_recover_a_follows_f_of_ax_y():
    metric = random_generalized_metric(4, seed=3)
    p = metric.chart.sample(1, seed=1)[0]
    g, F = metric.g.at(p), metric.F.at(p)
    A = recover_a(metric.g, metric.F, p)
    # F(X, Y) = g(AX, Y)
    assert_allclose(A.T @ g, F, atol=TOL)


def test_frame_from_a_matches_frame_from_f():
    metric = random_generalized_metric(3, seed=11)
    p = metric.chart.sample(1, seed=2)[0]
    frame = metric.frame(p)

    def endomorphism(x):
        return metric.frame(x).A

    twin = GeneralizedMetric(metric.g, A=ArrayField(metric.chart, (1, 1), endomorphism))
    other = twin.frame(p)
    assert_allclose(other.F, frame.F, atol=1e-10)
    assert_allclose(other.dF, frame.dF, atol=1e-6)
    assert not twin.is_symbolic
    assert metric.is_symbolic


def test_decompose_splits_g_and_f():
    chart = Chart(("x", "y"))
    G = from_expressions(chart, [["1 + x^2", "x*y"], ["-x*y + 1", "2"]], (0, 2))
    g, F = decompose(G, probes=chart.probe_points(4))
    p = np.array([0.2, -0.7])
    assert_allclose(g.at(p) + F.at(p), G.at(p))
    assert_allclose(g.at(p), g.at(p).T)
    assert_allclose(F.at(p), -F.at(p).T)


def test_singular_metric_is_rejected():
    with pytest.raises(SingularMetricError):
        invert_metric(np.array([[1.0, 1.0], [1.0, 1.0]]))
    chart = Chart(("x", "y"))
    g = constant_field(chart, np.diag([1.0, 0.0]), (0, 2), "symmetric")
    F = constant_field(chart, np.zeros((2, 2)), (0, 2), "skew")
    with pytest.raises(SingularMetricError):
        GeneralizedMetric(g, F=F).frame([0.0, 0.0])


def test_generalized_metric_needs_exactly_one_of_f_and_a():
    chart = Chart(("x", "y"))
    g = constant_field(chart, np.eye(2), (0, 2), "symmetric")
    with pytest.raises(ShapeError):
        GeneralizedMetric(g)
    with pytest.raises(ShapeError):
        GeneralizedMetric(g, F=g, A=constant_field(chart, np.eye(2), (1, 1)))


def test_slot_helpers(rng):
    t = rng.normal(size=(3, 3, 3))
    A = rng.normal(size=(3, 3))
    v = rng.normal(size=3)
    assert_allclose(permute(t, "zxy")[0, 1, 2], t[2, 0, 1])
    # t(AX, Y, Z) for X = e_0
    assert_allclose(compose_slots(t, {0: A})[0], np.einsum("a,ayz->yz", A[:, 0], t))
    assert_allclose(contract(v, t, 0), np.einsum("x,xyz->yz", v, t))
    assert_allclose(d_two_form(np.zeros((3, 3, 3))), 0.0)


def test_callable_field_backends():
    fd = CallableField(lambda x: x[0] ** 2 * x[1])
    user = CallableField(lambda x: x[0] ** 2 * x[1], gradient=lambda x: np.array([2 * x[0] * x[1], x[0] ** 2]))
    x = np.array([0.7, -1.1])
    assert_allclose(fd.gradient(x), user.gradient(x), rtol=1e-6)
    assert fd.method == "fd" and user.method == "user"
    chart = Chart(("x", "y"))
    components = np.array([[fd, ConstantField(0.0, 2)], [ConstantField(0.0, 2), fd]], dtype=object)
    field = ComponentField(chart, (0, 2), components)
    assert not field.is_symbolic
