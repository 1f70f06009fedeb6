import json

import pytest

from spnet import is_dominating, load_model, minimal_dominating_sets, parse_vertex_set
from spnet.cli import run
from spnet.corpus import EXAMPLES


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_no_arguments_prints_usage(capsys):
    code, _, err = call(capsys)
    assert code == 2 and "usage" in err


def test_bad_subcommand(capsys):
    code, _, _ = call(capsys, "frobnicate")
    assert code == 2


def test_fire(capsys):
    code, out, _ = call(capsys, "fire", "fig1a.spn.json", "--seq", "t1")
    assert code == 0
    assert out.splitlines()[-1] == "((0,1,1,0),(1,0,1,0))"


def test_fire_with_marking(capsys):
    code, out, _ = call(capsys, "fire", "fig1b", "--seq", "t1", "--marking", "((1,0,0,0),(0,0,0,0))")
    assert out.splitlines()[-1] == "((0,0,1,0),(0,0,0,1))"


def test_fire_disabled_step(capsys):
    code, out, err = call(capsys, "fire", "fig1a", "--seq", "t1,t1")
    assert code == 1
    assert "step 2" in err
    assert out.splitlines() == ["((1,0,1,0),(1,0,0,0))", "((0,1,1,0),(1,0,1,0))"]


def test_fire_structured(capsys):
    code, out, _ = call(capsys, "fire", "fig1a", "--seq", "t2", "--format", "structured")
    data = json.loads(out)
    assert data["trace"][-1] == {"positive": [1, 0, 2, 0], "negative": [0, 1, 0, 1]}


def test_dominate_check_bees(capsys):
    code, out, _ = call(capsys, "dominate", "check", "bees.spn.json", "--set", "p1,p3,t1,t2,t3,t4")
    assert code == 0 and "dominating: true" in out


def test_strict_negative_verdict(capsys):
    args = ["dominate", "check", "bees", "--set", "p1,p2,t1,t2,t3,t4"]
    assert call(capsys, *args)[0] == 0
    code, out, _ = call(capsys, *args, "--strict")
    assert code == 1 and "p3: sign-mismatch" in out


def test_unknown_vertex_is_usage_error(capsys):
    code, _, err = call(capsys, "dominate", "check", "bees", "--set", "p9")
    assert code == 2 and "p9" in err


def test_missing_model(capsys, tmp_path):
    code, _, _ = call(capsys, "validate", str(tmp_path / "nope.spn.json"))
    assert code == 2


def test_bad_model_file(capsys, tmp_path):
    path = tmp_path / "bad.spn.json"
    path.write_text('{"places": [}')
    code, _, err = call(capsys, "validate", str(path))
    assert code == 2 and "line 1" in err


def test_validate_file(capsys, tmp_path):
    path = tmp_path / "lonely.spn.json"
    path.write_text(json.dumps({
        "places": ["p", "q"], "transitions": ["t"],
        "arcs": [{"from": "p", "to": "t", "sign": "+"}],
        "initial_marking": {"positive": [0, 0], "negative": [0, 0]},
    }))
    code, out, _ = call(capsys, "validate", str(path), "--strict")
    assert code == 1
    assert "ok: false" in out and "isolated-vertex" in out


def test_signs_table(capsys):
    code, out, _ = call(capsys, "signs", "fig1a")
    lines = out.splitlines()
    assert lines[0] == "vertex\tarcs\tmarking"
    assert lines[1] == "p1\t-\t-"
    assert lines[-1] == "t2\t-"


def test_minimal_matches_library(capsys):
    net = EXAMPLES["bees"].load()
    code, out, _ = call(capsys, "dominate", "minimal", "bees", "--format", "structured")
    data = json.loads(out)
    expected = minimal_dominating_sets(net.structure, net.initial_marking)
    assert data["kind"] == "inclusion-minimal"
    assert data["sets"] == [[net.structure.label(v) for v in sorted(d)] for d in expected]


def test_minimum_labelled_separately(capsys):
    code, out, _ = call(capsys, "dominate", "minimum", "bees")
    assert out.startswith("minimum-cardinality dominating set")


def test_dependent_and_maximal(capsys):
    code, out, _ = call(capsys, "dominate", "dependent", "fig1a", "--set", "t1,t2", "--nodes", "0")
    net = EXAMPLES["fig1a"].load()
    expected = is_dominating(net.structure, parse_vertex_set(net.structure, "t1,t2"), net.initial_marking)
    assert (f"dominating: {str(expected.verdict).lower()}") in out
    code, out, err = call(capsys, "dominate", "dependent", "fig1a", "--set", "t1,t2", "--nodes", "0,3")
    assert code == 1 and "connected" in err
    code, out, _ = call(
        capsys, "dominate", "maximal-markings", "producer-consumer",
        "--set", "p1,p2,p3,p4,p5,p6,p8,t1,t2,t3,t4,t5,t6", "--max-depth", "3", "--format", "structured",
    )
    data = json.loads(out)
    assert data["truncated"] is True and len(data["subtrees"]) == 1


def test_similar(capsys):
    for argv in (["similar", "plagiarism-k5"], ["dominate", "similar", "plagiarism-k5"]):
        code, out, _ = call(capsys, *argv)
        assert "similar: {p1,p3}" in out and "D2: {t2,t4,t5}" in out


def test_synth(capsys):
    code, out, _ = call(capsys, "synth", "thm1", "plagiarism-k5", "--format", "structured")
    data = json.loads(out)
    assert data["parity_constraints"]["p0"] == "odd"
    assert all(d["verified"] for d in data["dominating_sets"])
    code, out, _ = call(capsys, "synth", "thm2", "plagiarism-k5", "--strict")
    assert code == 1 and "source vertex" in out


def test_reach(capsys):
    code, out, _ = call(capsys, "reach", "fig1b")
    assert "((0,0,1,0),(0,0,0,1))" in out and "complete: true" in out
    code, out, _ = call(capsys, "reach", "producer-consumer", "--max-depth", "2", "--strict")
    assert code == 1


def test_export_dot(capsys, tmp_path):
    code, out, _ = call(capsys, "export-dot", "fig1b")
    assert out.startswith("digraph")
    target = tmp_path / "fig.dot"
    call(capsys, "export-dot", "fig1b", "-o", str(target))
    assert target.read_text() == out


def test_examples_list(capsys):
    code, out, _ = call(capsys, "examples", "list")
    assert len(out.splitlines()) == 6


def test_examples_copy(capsys, tmp_path):
    code, out, _ = call(capsys, "examples", "copy", "bees", str(tmp_path))
    net = load_model((tmp_path / "bees.spn.json").read_text())
    assert str(net.initial_marking) == "((3,0,0),(0,1,0))"


def test_examples_copy_unknown(capsys, tmp_path):
    code, _, err = call(capsys, "examples", "copy", "nope", str(tmp_path))
    assert code == 2 and "unknown example" in err


@pytest.mark.parametrize("example_id", sorted(EXAMPLES))
def test_copied_file_loads_through_cli(capsys, tmp_path, example_id):
    call(capsys, "examples", "copy", example_id, str(tmp_path / "x.spn.json"))
    code, out, _ = call(capsys, "validate", str(tmp_path / "x.spn.json"), "--strict")
    assert code == 0
