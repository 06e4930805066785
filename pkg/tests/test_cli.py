"""Thin-client CLI: output, exit codes, JSON stream."""

import json
import os
import subprocess
import sys

from schurq.cli import main
from schurq.gamma import GammaPoly


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute(capsys):
    code, out, _ = run_cli(capsys, "compute", "[2,1]")
    assert code == 0 and out.strip() == "q2*q1 - 2*q3"
    code, out, _ = run_cli(capsys, "compute", "[]")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run_cli(capsys, "compute", "[-2,2]")
    assert code == 0 and out.strip() == "2"


def test_compute_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "compute", "[3,2,1]", "--json")
    assert code == 0
    parsed = GammaPoly.from_json_dict(json.loads(out))
    code, text_out, _ = run_cli(capsys, "compute", "[3,2,1]")
    assert parsed.text() == text_out.strip()


def test_compute_normalize(capsys):
    code, out, _ = run_cli(capsys, "compute", "[1,1]", "--normalize")
    assert code == 0 and out.strip() == "0"


def test_skew(capsys):
    code, out, _ = run_cli(capsys, "skew", "[2,1]", "[1]", "--normalize")
    assert code == 0 and out.strip() == "1/2*q1^2"
    code, out, _ = run_cli(capsys, "skew", "[1]", "[1]")
    assert code == 0 and out.strip() == "1"
    code, skew_out, _ = run_cli(capsys, "skew", "[2,1]", "[0]")
    code, compute_out, _ = run_cli(capsys, "compute", "[2,1]")
    assert skew_out == compute_out


def test_decompose(capsys):
    code, out, _ = run_cli(capsys, "decompose", "[3,2,1]", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "r-row: 1, q1, q1^2 - q2"
    assert lines[1] == "counts: 1,1,2"
    code, out, _ = run_cli(capsys, "decompose", "[5]", "1")
    assert code == 0 and out.splitlines()[0] == "r-row: 1"
    code, out, _ = run_cli(capsys, "decompose", "[3,1]", "2")
    assert code == 0 and out.splitlines()[0].endswith("q2")


def test_verify_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "macdonald-relation", "--trials", "2")
    assert code == 0
    assert "ok   macdonald-relation" in out


def test_verify_seeded_pf_det(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "pf-det", "--size", "6", "--trials", "3", "--seed", "7"
    )
    assert code == 0


def test_verify_vertex_grid(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "vertex", "--max-len", "3", "--max-part", "5",
        "--p", "-4..5", "--trials", "2",
    )
    assert code == 0
    assert "ok   vertex" in out


def test_verify_json_stream(capsys):
    code, out, err = run_cli(
        capsys, "verify", "alt-two-part", "--p", "0..2", "--n", "0..2",
        "--mode", "gamma", "--json",
    )
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    assert reports and all(r["equal"] for r in reports)
    assert all(r["mode"] == "gamma" for r in reports)
    assert "ok" in err


def test_verify_gamma_level_suite_fails_in_free_mode(capsys):
    code, out, _ = run_cli(capsys, "verify", "swap", "--mode", "free")
    assert code == 1
    assert "FAIL" in out


def test_catalog_listing(capsys):
    code, out, _ = run_cli(capsys, "catalog")
    assert code == 0
    assert "macdonald-relation" in out and "pf-det" in out


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "compute", "oops")
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "verify", "no-such-suite")
    assert code == 2
    code, _, err = run_cli(capsys, "decompose", "[3,2,1]", "9")
    assert code == 2


def test_module_entry_point():
    src = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")
    env = dict(os.environ)
    env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "schurq.cli", "compute", "[2,1]"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "q2*q1 - 2*q3"
