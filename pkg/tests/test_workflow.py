import pytest

from manifolds import builtin, random_generalized_metric
from ngt import AGREE, ERRATUM
from shared.models import Verdict
from structures import StructureKind
from workflows import ANCHORS, AUTO, SUITE_FOR_KIND, SUITES, CheckSuiteWorkflow, anchor_for


@pytest.fixture(scope="module")
def workflow():
    return CheckSuiteWorkflow()


def test_every_structure_kind_has_a_suite():
    for kind in StructureKind:
        assert SUITE_FOR_KIND[kind] in SUITES


def test_flat_kahler_passes_the_hermitian_suite(workflow):
    report = workflow.run(builtin("flat-kahler-4"), count=4, seed=1)
    assert report.structure == StructureKind.ALMOST_HERMITIAN.value
    assert report.suite == "hermitian"
    assert report.passed
    assert report.erratum is None
    names = {r.name for r in report.records}
    assert {"structure", "nearly_kahler", "hermitian_ngt", "hermitian_ngt.biconditional"} <= names


def test_six_sphere_passes_on_a_hundred_points(workflow):
    report = workflow.run(builtin("s6-nearly-kahler"), count=100, seed=7)
    assert report.points + report.skipped == 100
    assert report.passed, [r for r in report.records if r.verdict != Verdict.PASS]
    assert report.record("hermitian_ngt.biconditional").max_residual == 0.0


def test_deformed_hermitian_fails_the_skew_condition(workflow):
    report = workflow.run(builtin("deformed-hermitian-r4"), count=16, seed=3)
    assert not report.passed
    assert report.record("hermitian_ngt").verdict == Verdict.FAIL
    assert report.record("nearly_kahler").verdict == Verdict.FAIL
    assert report.record("hermitian_ngt.biconditional").verdict == Verdict.PASS


def test_records_are_sorted_and_anchored(workflow):
    report = workflow.run(builtin("nk-times-line"), count=3, seed=2)
    names = [r.name for r in report.records]
    assert names == sorted(names)
    for record in report.records:
        assert record.anchor
        assert record.samples >= 1
    assert all(name in ANCHORS for name in ("contact_ngt", "contact_corollary"))


def test_anchor_for_checks_inside_a_family():
    assert anchor_for("skew_ngt") == ANCHORS["skew_ngt"]
    assert anchor_for("skew_ngt.torsion") == f"{ANCHORS['skew_ngt']} [torsion]"


@pytest.mark.parametrize("suite", ["generic", "ngt"])
def test_decomposition_suites_pass_on_the_six_sphere(workflow, suite):
    report = workflow.run(builtin("s6-nearly-kahler"), suite=suite, count=4, seed=7)
    assert report.suite == suite
    assert report.erratum in (AGREE, ERRATUM)
    for key in ("nabla_g_match", "nabla_F_match", "metricity", "nijenhuis"):
        assert report.record(f"decomposition.{key}").verdict == Verdict.PASS
    assert report.passed, [r.name for r in report.records if r.verdict != Verdict.PASS]


def test_decomposition_is_left_out_where_the_skew_condition_fails(workflow):
    report = workflow.run(random_generalized_metric(4, seed=4), suite="generic", count=4, seed=8)
    assert report.erratum in (AGREE, ERRATUM)
    assert not any(r.name.startswith("decomposition.") for r in report.records)
    assert report.passed


def test_random_metric_runs_the_generic_suite(workflow):
    report = workflow.run(random_generalized_metric(4, seed=2), count=3, seed=0)
    assert report.structure == StructureKind.GENERIC.value
    assert report.suite == SUITE_FOR_KIND[StructureKind.GENERIC]
    assert report.record("levi_civita.torsion").verdict == Verdict.PASS
    assert report.record("round_trip.nabla_g").verdict == Verdict.PASS


def test_forced_suite_overrides_classification(workflow):
    report = workflow.run(builtin("flat-kahler-4"), suite="eisenhart", count=2, seed=0)
    assert report.structure == StructureKind.ALMOST_HERMITIAN.value
    assert report.suite == "eisenhart"
    assert {r.name for r in report.records} == {"eisenhart_torsion", "eisenhart_nabla_g", "eisenhart_nijenhuis"}
    assert report.passed


def test_same_seed_gives_the_same_report(workflow):
    first = workflow.run(builtin("para-product-line"), count=3, seed=9)
    second = workflow.run(builtin("para-product-line"), count=3, seed=9)
    assert first.to_json() == second.to_json()


def test_invalid_requests(workflow):
    with pytest.raises(ValueError):
        workflow.run(builtin("flat-kahler-2"), count=0)
    with pytest.raises(ValueError):
        workflow.run(builtin("flat-kahler-2"), suite="no-such-suite")
    assert AUTO not in SUITES
