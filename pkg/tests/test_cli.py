"""Tests for the command-line interface, run in-process through main()."""

import json

import pytest

from colgame.cli import EXIT_FALSE, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_round_trip(capsys):
    code, out = run(capsys, "parse", "--formula", "p -> q & r")
    assert code == EXIT_OK
    assert "p -> q & r" in out


def test_parse_json(capsys):
    code, out = run(capsys, "parse", "--formula", "~(p /\\ q)", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["ok"] is True
    assert data["rendered"] == "~(p /\\ q)"


def test_parse_error_is_usage_exit(capsys):
    code, out = run(capsys, "parse", "--formula", "((")
    assert code == EXIT_USAGE


def test_solve_with_bundled_interp(capsys):
    code, out = run(
        capsys,
        "solve", "--formula", "chall x . chex y . y = succ(x)",
        "--interp", "succ", "--budget", "0", "--json",
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["winnable"] is True
    assert {"state": "F:0", "action": "1"} in data["strategy"]


def test_solve_with_interp_file(capsys, tmp_path):
    path = tmp_path / "tiny.json"
    path.write_text(json.dumps({"universe": 1, "predicates": {"p/0": ["F"]}}))
    code, out = run(capsys, "solve", "--formula", "p", "--interp", str(path))
    assert code == EXIT_OK
    assert "winnable: false" in out


def test_expect_winnable_exit_code(capsys, tmp_path):
    path = tmp_path / "tiny.json"
    path.write_text(json.dumps({"universe": 1, "predicates": {"p/0": ["F"]}}))
    code, _ = run(
        capsys, "solve", "--formula", "p", "--interp", str(path), "--expect-winnable"
    )
    assert code == EXIT_FALSE


def test_state_limit_exit_code(capsys):
    code, out = run(
        capsys,
        "solve", "--formula", "chall x . chex y . y = succ(x)",
        "--interp", "succ", "--max-states", "3",
    )
    assert code == EXIT_LIMIT


def test_missing_interp_is_input_error(capsys):
    code, _ = run(capsys, "solve", "--formula", "p", "--interp", "no_such_table")
    assert code == EXIT_USAGE


def test_uniform_family_verdicts(capsys, tmp_path):
    paths = []
    for k, value in enumerate(["T", "F"]):
        p = tmp_path / f"m{k}.json"
        p.write_text(json.dumps({"universe": 1, "predicates": {"p/0": [value]}}))
        paths.append(str(p))
    family = ",".join(paths)
    code, out = run(capsys, "uniform", "--formula", "p \\/ ~p", "--family", family, "--json")
    assert code == EXIT_OK
    assert json.loads(out)["winnable"] is True
    code, out = run(capsys, "uniform", "--formula", "p | ~p", "--family", family, "--json")
    assert code == EXIT_OK
    assert json.loads(out)["winnable"] is False


def test_verify_fixture_strategies(capsys):
    for fixture in ("fig1", "copycat", "grandmother"):
        code, out = run(capsys, "verify", "--fixture", fixture)
        assert code == EXIT_OK
        assert "holds" in out


def test_verify_failure_exit_code(capsys):
    # the copycat script does not fit the fig2 game shape
    code, out = run(capsys, "verify", "--fixture", "fig2", "--strategy", "copycat")
    assert code == EXIT_USAGE


def test_translate(capsys):
    code, out = run(capsys, "translate", "--formula", "a \\/ ~a")
    assert code == EXIT_OK
    assert out.strip() == "A | o~A"
    code, out = run(capsys, "translate", "--formula", "a \\/ ~a", "--elementary")
    assert code == EXIT_OK
    assert out.strip() == "a | o~a"


def test_audit_single_formula(capsys):
    code, out = run(capsys, "audit", "--formula", "((a -> b) -> a) -> a", "--budget", "0")
    assert code == EXIT_OK
    assert "separation-witness" in out


def test_audit_corpus_file(capsys, tmp_path):
    p = tmp_path / "corpus.txt"
    p.write_text("a -> a\n# comment\n\na \\/ ~a\n")
    code, out = run(capsys, "audit", "--file", str(p), "--budget", "1")
    assert code == EXIT_OK
    lines = [l for l in out.splitlines() if l]
    assert lines[0].startswith("formula\t")
    assert len(lines) == 3
    assert "ANOMALY" not in out


def test_play_scripted_session(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("gamma\nstop\n"))
    code, out = run(capsys, "play", "--fixture", "fig1")
    assert code == EXIT_OK
    assert "T:alpha" in out
    assert "finished: T wins" in out


def test_unknown_command_is_usage(capsys):
    assert main(["bogus"]) == EXIT_USAGE


def test_formula_and_file_are_exclusive(capsys, tmp_path):
    p = tmp_path / "f.txt"
    p.write_text("p\n")
    code = main(["parse", "--formula", "p", "--file", str(p)])
    assert code == EXIT_USAGE
