import json

import pytest

from braidrev.cli import main
from braidrev.explorer import Trace
from braidrev.reversing import ReversingGrid
from braidrev.verifier import BoundReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reverse(capsys):
    code, out, _ = run(capsys, "reverse", "Ab", "--strands", "3")
    assert code == 0
    assert out.splitlines()[:2] == ["N_R: ba", "D_R: ab"]


def test_reverse_json_numeric(capsys):
    code, out, _ = run(capsys, "reverse", "Abac", "--strands", "4", "--json", "--numeric")
    doc = json.loads(out)
    assert doc["numerator"] == "2 1 3 2" and doc["denominator"] == "2 3"
    assert doc["steps"] == 3


def test_reverse_left(capsys):
    code, out, _ = run(capsys, "reverse-left", "aB", "-n", "3")
    assert code == 0 and "N_L: ba" in out and "D_L: ab" in out


def test_grid_json_round_trip(capsys):
    code, out, _ = run(capsys, "grid", "AbAc", "--strands", "4", "--json")
    g = ReversingGrid.from_dict(json.loads(out))
    assert str(g.u[2][2]) == "abc"
    code, out, _ = run(capsys, "grid", "AbAc", "--strands", "4")
    assert "simple factors: numerator 2, denominator 2" in out


def test_wordproblem_and_equivalent(capsys):
    assert run(capsys, "wordproblem", "abaBAB", "--strands", "3")[1] == "trivial: true\n"
    assert run(capsys, "wordproblem", "ab", "--strands", "3")[1] == "trivial: false\n"
    assert run(capsys, "equivalent", "aba", "bab", "--strands", "3")[1] == "equivalent: true\n"


def test_family_trace_and_replay(capsys, tmp_path):
    path = tmp_path / "p2.trace"
    code, _, _ = run(capsys, "family", "prop2", "--k", "2", "--emit-trace", "-o", str(path))
    assert code == 0
    assert str(Trace.from_text(path.read_text()).final) == "BacbacACacAC"
    code, out, _ = run(capsys, "replay", str(path))
    assert code == 0 and out.startswith("valid: true")


def test_family_trace_json(capsys, tmp_path):
    code, out, _ = run(capsys, "family", "prop4", "--k", "0", "--emit-trace", "--json")
    t = Trace.from_dict(json.loads(out))
    path = tmp_path / "p4.json"
    path.write_text(out)
    assert run(capsys, "replay", str(path), "--json")[0] == 0
    assert len(t.final) == 24


def test_replay_failure_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.trace"
    path.write_text("strands 3\nstart Ab\nreverse-right 0 near -> abAB\n")
    code, out, _ = run(capsys, "replay", str(path))
    assert code == 1 and "first bad step: 1" in out


def test_explore_report(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "explore", "ccBaaBca", "--strands", "4", "--moves",
                       "right,left,comm", "--variant", "reduced", "--budget", "500",
                       "--report", str(report))
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["nodes_explored"] == 500
    assert f"max length: {doc['max_length_found']}" in out


def test_verify_bounds_json(capsys):
    code, out, _ = run(capsys, "verify-bounds", "--bound", "prop5-final", "--strands", "4",
                       "--len", "8", "--count", "50", "--seed", "1", "--json")
    r = BoundReport.from_dict(json.loads(out))
    assert code == 0 and r.ok and r.samples == 50


def test_output_is_deterministic(capsys):
    argv = ["verify-bounds", "--bound", "prop3-i", "--strands", "4", "--len", "8",
            "--count", "5", "--strategies", "3", "--json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


@pytest.mark.parametrize("argv", [
    ["reverse", "Az", "--strands", "3"],
    ["reverse", "Ab", "--strands", "1"],
    ["family", "prop2", "--k", "0"],
    ["replay", "/nonexistent/trace"],
])
def test_domain_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("braidrev: error")


def test_resource_limit_exit_2(capsys, monkeypatch):
    monkeypatch.setenv("BRAIDREV_BUDGET", "2")
    code, _, err = run(capsys, "reverse", "AbAbAb", "--strands", "3")
    assert code == 2 and "resource limit" in err


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["reverse", "Ab"])
    assert exc.value.code == 2
