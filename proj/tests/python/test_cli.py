"""End-to-end checks of the command-line binary (path in ORBITCLASS_CLI)."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("ORBITCLASS_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="ORBITCLASS_CLI not set")


def run(*args, stdin_file=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_degree_envelope():
    proc = run("degree", "2", "4")
    assert proc.returncode == 0
    env = json.loads(proc.stdout)
    assert env["command"] == "degree"
    assert (env["r"], env["n"], env["mode"]) == (2, 4, "exact")
    assert env["result"]["degree"] == "4"
    total = sum(int(t["product"]) for t in env["result"]["terms"])
    assert total == 4


def test_matroid_and_tuple_pipeline(tmp_path):
    matrix = write(tmp_path, "m.json", {
        "rows": 2, "cols": 4,
        "entries": [["1", "1", "1", "1"], ["1", "2", "3", "4"]],
    })
    proc = run("tuple", matrix)
    assert proc.returncode == 0
    tuple_doc = write(tmp_path, "t.json", json.loads(proc.stdout))
    lifted = run("lift", tuple_doc)
    assert lifted.returncode == 0
    env = json.loads(lifted.stdout)
    assert "2*s[(1)](u)" in env["result"]["schur_rendering"]
    assert env["convention"] == {"eps_u": -1, "eps_t": -1}


def test_exit_code_rank_deficient(tmp_path):
    matrix = write(tmp_path, "bad.json", {
        "rows": 2, "cols": 4,
        "entries": [["1", "2", "3", "4"], ["2", "4", "6", "8"]],
    })
    proc = run("matroid", matrix)
    assert proc.returncode == 3
    assert json.loads(proc.stderr)["error"]["kind"] == "RankDeficient"


def test_exit_code_parse_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{broken")
    assert run("matroid", str(path)).returncode == 2


def test_exit_code_size_limit():
    assert run("class", "2", "20").returncode == 5
    assert run("class", "3", "7").returncode == 5  # refuses without --force


def test_exit_code_domain_error(tmp_path):
    matrix = write(tmp_path, "m.json", {
        "rows": 2, "cols": 4,
        "entries": [["1", "1", "1", "1"], ["1", "2", "3", "4"]],
    })
    assert run("localize", matrix, "--basis", "1,2,3").returncode == 4


def test_verify_suite_passes():
    proc = run("verify", "cauchy")
    assert proc.returncode == 0
    env = json.loads(proc.stdout)
    assert env["result"]["ok"] is True
    assert env["result"]["failed"] == 0


def test_certify_mode_reports_bound():
    proc = run("verify", "lr-vs-omega", "--mode", "certify", "--max-n", "4",
               "--seed", "7", "--trials", "5")
    assert proc.returncode == 0
    env = json.loads(proc.stdout)
    assert env["mode"] == "certify" and env["trials"] == 5
    assert all(c["failure_bound"].startswith("<=") for c in env["result"]["cases"])
