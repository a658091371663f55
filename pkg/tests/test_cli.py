import json

import pytest

from cli import format_array, load_spec, main, parse_spec_text
from manifolds import BUILTINS, builtin
from shared.errors import SpecFileError
from structures import StructureKind, classify
from workflows import CheckSuiteWorkflow

FLAT_KAHLER_4 = [
    'name = "flat-kahler-4"',
    "",
    "[chart]",
    'coords = ["x1", "x2", "x3", "x4"]',
    "",
    "[metric]",
    '"1,1" = 1',
    '"2,2" = 1',
    '"3,3" = 1',
    '"4,4" = 1',
    "",
    "[two_form]",
    '"1,2" = 1',
    '"3,4" = 1',
]


def spec_text(lines=FLAT_KAHLER_4):
    return "\n".join(lines) + "\n"


@pytest.fixture
def spec_path(tmp_path):
    path = tmp_path / "flat-kahler-4.toml"
    path.write_text(spec_text(), encoding="utf-8")
    return path


def test_spec_file_builds_a_hermitian_manifold(spec_path):
    manifold = load_spec(spec_path)
    assert manifold.name == "flat-kahler-4"
    assert manifold.is_symbolic
    assert classify(manifold, manifold.chart.sample(4, seed=0)) == StructureKind.ALMOST_HERMITIAN
    frame = manifold.frame([0.1, 0.2, 0.3, 0.4])
    assert frame.A[1, 0] == pytest.approx(1.0)
    assert frame.A[0, 1] == pytest.approx(-1.0)


def test_duplicate_skew_key_is_reported_with_its_line():
    with pytest.raises(SpecFileError) as info:
        parse_spec_text(spec_text(FLAT_KAHLER_4 + ['"2,1" = -1']))
    assert "duplicate skew key" in str(info.value)
    assert info.value.line == 15


def test_lower_triangle_two_form_key_is_rejected():
    lines = FLAT_KAHLER_4[:-1] + ['"4,3" = -1']
    with pytest.raises(SpecFileError) as info:
        parse_spec_text(spec_text(lines))
    assert info.value.line == 14


def test_expression_errors_carry_the_line():
    lines = list(FLAT_KAHLER_4)
    lines[6] = '"1,1" = "1 +"'
    with pytest.raises(SpecFileError) as info:
        parse_spec_text(spec_text(lines))
    assert info.value.line == 7
    assert "offset" in str(info.value)


def test_contact_pairing_must_be_one():
    lines = [
        "[chart]",
        'coords = ["x", "y", "t"]',
        "[metric]",
        '"1,1" = 1',
        '"2,2" = 1',
        '"3,3" = 1',
        "[two_form]",
        '"1,2" = 1',
        "[contact]",
        "eta = [0, 0, 1]",
        "xi = [0, 0, 2]",
    ]
    with pytest.raises(SpecFileError) as info:
        parse_spec_text(spec_text(lines))
    assert "eta(xi)" in str(info.value)


def test_spec_needs_exactly_one_of_two_form_and_endomorphism():
    with pytest.raises(SpecFileError):
        parse_spec_text(spec_text(FLAT_KAHLER_4[:11]))


def test_missing_spec_file(tmp_path):
    with pytest.raises(SpecFileError):
        load_spec(tmp_path / "absent.toml")


def test_spec_file_matches_the_builtin(spec_path):
    workflow = CheckSuiteWorkflow()
    from_file = workflow.run(load_spec(spec_path), count=4, seed=5)
    from_builtin = workflow.run(builtin("flat-kahler-4"), count=4, seed=5)
    assert from_file.structure == from_builtin.structure
    assert from_file.suite == from_builtin.suite
    assert [(r.name, r.verdict) for r in from_file.records] == [
        (r.name, r.verdict) for r in from_builtin.records
    ]
    assert from_file.passed and from_builtin.passed


def test_check_exit_codes(spec_path):
    assert main(["check", "--builtin", "flat-kahler-4", "--points", "1"]) == 0
    assert main(["check", "--spec", str(spec_path), "--points", "2"]) == 0
    assert main(["check", "--builtin", "contact-r3", "--points", "4"]) == 1
    assert main(["check", "--builtin", "no-such-manifold"]) == 2
    assert main(["check", "--spec", str(spec_path.parent / "absent.toml")]) == 2


def test_json_report_is_deterministic(tmp_path):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    for path in (first, second):
        args = ["check", "--builtin", "flat-kahler-2", "--points", "3", "--seed", "11", "--json", str(path)]
        assert main(args) == 0
    assert first.read_bytes() == second.read_bytes()
    payload = json.loads(first.read_text())
    assert "wall_time" not in payload
    names = [r["name"] for r in payload["records"]]
    assert names == sorted(names)
    assert payload["seed"] == 11 and payload["points"] == 3


def test_check_prints_the_report(capsys):
    main(["check", "--builtin", "contact-r3", "--points", "2"])
    out = capsys.readouterr().out
    assert "RESULT: FAIL" in out
    assert "contact_ngt" in out


def test_list_prints_every_builtin(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for name in BUILTINS:
        assert name in out


def test_eval_prints_components(capsys):
    assert main(["eval", "--builtin", "flat-kahler-4", "--point", "0,0,0,0", "--quantity", "christoffels"]) == 0
    assert "(all components vanish)" in capsys.readouterr().out
    assert main(["eval", "--builtin", "contact-r3", "--point", "0.1,0.2,0.3", "--quantity", "dF"]) == 0
    assert "dF shape=(3, 3, 3)" in capsys.readouterr().out


def test_eval_rejects_bad_points(capsys):
    assert main(["eval", "--builtin", "flat-kahler-4", "--point", "a,b", "--quantity", "dF"]) == 2
    assert main(["eval", "--builtin", "flat-kahler-4", "--point", "0,0", "--quantity", "dF"]) == 2
    assert "Error:" in capsys.readouterr().err


def test_format_array_uses_one_based_indices():
    text = format_array("t", [[0.0, 2.0], [0.0, 0.0]])
    assert "[1,2] = 2" in text
