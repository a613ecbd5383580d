"""CLI surface: subcommands, exit codes, output formats."""

import json
import subprocess
import sys

import pytest

CMD = [sys.executable, "-m", "stratreg"]


def run(*args, timeout=180):
    return subprocess.run(CMD + list(args), capture_output=True, text=True,
                          timeout=timeout)


def test_classify_holds():
    r = run("classify", "--a", "3", "--b", "2", "--c", "3", "--d", "5",
            "--field", "real", "--condition", "b")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "holds"


def test_classify_undecided():
    r = run("classify", "--a", "3", "--b", "2", "--c", "5", "--d", "7",
            "--field", "real", "--condition", "L")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "undecided"


def test_classify_usage_errors():
    r = run("classify", "--a", "0", "--b", "2", "--c", "3", "--d", "5",
            "--field", "real", "--condition", "b")
    assert r.returncode == 2
    r = run("classify", "--a", "1", "--b", "2", "--c", "3", "--d", "5",
            "--field", "real", "--condition", "x")
    assert r.returncode == 2
    r = run("classify", "--a", "1", "--field", "real", "--condition", "a")
    assert r.returncode == 2


def test_classify_json_envelope():
    r = run("classify", "--a", "1", "--b", "2", "--c", "3", "--d", "4",
            "--field", "complex", "--condition", "w", "--json")
    assert r.returncode == 0
    env = json.loads(r.stdout)
    assert env["tool"] == "strat-regularity"
    assert env["results"]["verdict"] == "holds"
    assert env["results"]["leaf_trace"].startswith("diagram-5")


def test_verify_discrepancy_exit_code():
    r = run("verify", "--a", "2", "--b", "4", "--c", "1", "--d", "3",
            "--field", "real", "--condition", "w", "--json")
    assert r.returncode == 3
    env = json.loads(r.stdout)
    res = env["results"]
    assert res["status"] == "DISCREPANCY"
    assert res["classifier"] == "holds"
    assert res["verifier"]["arc"] == {"p": 3, "q": 1, "sigma_x": 1,
                                      "lambda": "1", "branch": "+", "pair": None}
    assert res["verifier"]["order"] == "-1/2"


def test_verify_consistent_fails_with_witness():
    r = run("verify", "--a", "3", "--b", "2", "--c", "3", "--d", "5",
            "--field", "real", "--condition", "w")
    assert r.returncode == 0
    assert "CONSISTENT" in r.stdout


def test_verify_consistent_holds_no_witness():
    r = run("verify", "--a", "1", "--b", "2", "--c", "3", "--d", "4",
            "--field", "real", "--condition", "a", "--max-height", "10",
            "--time-budget", "5")
    assert r.returncode == 0
    assert "CONSISTENT" in r.stdout and "no witness" in r.stdout


def test_profile_and_gap():
    r = run("profile", "--a", "3", "--b", "2", "--c", "3", "--d", "5", "--json")
    assert r.returncode == 0
    env = json.loads(r.stdout)
    assert env["results"]["verdicts"]["real"]["w"] == "fails"
    r = run("gap", "--n", "6", "--json")
    env = json.loads(r.stdout)
    assert env["results"]["count"] == 11
    assert {"a": 3, "b": 2, "c": 3, "d": 5} in env["results"]["tuples"]


def test_check_exit_codes():
    r = run("check", "--a", "3", "--b", "2", "--c", "3", "--d", "5")
    assert r.returncode == 0 and "no violations" in r.stdout
    r = run("check", "--a", "2", "--b", "4", "--c", "1", "--d", "3")
    assert r.returncode == 3 and "w=>b" in r.stdout


def test_sweep_csv_output(tmp_path):
    out = tmp_path / "report.csv"
    r = run("sweep", "--n", "2", "--format", "csv", "--out", str(out))
    assert r.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("a,b,c,d,field,condition,verdict")
    assert len(lines) == 1 + 16 * 8


def test_sweep_json_stdout():
    r = run("sweep", "--n", "1")
    assert r.returncode == 0
    env = json.loads(r.stdout)
    assert env["results"]["summary"]["tuples"] == 1


def test_sweep_rejects_bad_condition():
    r = run("sweep", "--n", "2", "--conditions", "a,zzz")
    assert r.returncode == 2
