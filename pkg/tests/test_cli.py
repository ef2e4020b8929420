"""Command line behavior: exit codes, formats, determinism, config files."""

import copy
import json

import pytest

from ncdirac.cli import main
from ncdirac.lie_algebra import build_deformed_algebra


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_algebra_single_pair(capsys):
    code, out = run(capsys, "verify", "algebra", "--eps4", "+1", "--eps5", "-1")
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["failed"] == 0
    checks = sorted({r["check"] for r in doc["reports"]})
    assert checks == [
        "contraction", "isomorphism", "jacobi_deformed", "jacobi_orthogonal",
    ]


def test_all_signs_sweep(capsys):
    code, out = run(capsys, "verify", "algebra", "--all-signs")
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["total"] == 16  # 4 checks x 4 sign pairs


def test_invalid_sign_is_usage_error(capsys):
    code, _ = run(capsys, "verify", "algebra", "--eps4", "+1", "--eps5", "0")
    assert code == 2


def test_invalid_coupling_is_usage_error(capsys):
    code, _ = run(capsys, "seesaw", "--g", "nonsense")
    assert code == 2


def test_negative_ell_is_usage_error(capsys):
    code, _ = run(capsys, "modes", "--ell", "-1/2")
    assert code == 2


def test_missing_subcommand(capsys):
    assert main([]) == 2


def test_rep_family_count(capsys):
    code, out = run(capsys, "verify", "rep", "--eps5", "-1")
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"] == {"failed": 0, "passed": 8, "total": 8}


def test_clifford_relation_count(capsys):
    code, out = run(capsys, "verify", "clifford", "--eps5", "+1")
    assert code == 0
    doc = json.loads(out)
    relation_reports = [
        r for r in doc["reports"]
        if "anticommutator" in r["check"] or "square" in r["check"]
    ]
    assert len(relation_reports) == 20


def test_planewave_order_flag(capsys):
    code, out = run(capsys, "verify", "planewave", "--order", "3", "--eps5", "-1")
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["order"] == 3
    momentum = [r for r in doc["reports"] if r["check"] == "planewave_momentum"]
    assert momentum[0]["details"]["exactly_zero"] is True


def test_modes_roots_example(capsys):
    code, out = run(capsys, "modes", "--eps5", "-1", "--ell", "2")
    assert code == 0
    doc = json.loads(out)
    roots = [r for r in doc["reports"] if r["check"] == "dispersion_roots"]
    assert roots[0]["details"]["roots"] == ["0", "1"]
    heavy = [r for r in doc["reports"] if r["check"] == "modes_reference_heavy"]
    assert heavy[0]["details"]["class"] == "Dirac"


def test_seesaw_example(capsys):
    code, out = run(capsys, "seesaw", "--g", "1", "--vev", "0.01", "--ell", "1")
    assert code == 0
    doc = json.loads(out)
    for r in doc["reports"]:
        if r["check"] == "seesaw_leading":
            assert r["details"]["mass"] == "1/20000"  # 5e-5
        if r["check"] == "seesaw_spectrum":
            assert float(r["residual"]) < 1e-3


def test_scan_rows(capsys):
    code, out = run(
        capsys, "scan", "--param", "ell", "--from", "0.5", "--to", "2",
        "--steps", "4", "--eps5", "-1",
    )
    assert code == 0
    doc = json.loads(out)
    rows = doc["rows"]
    assert len(rows) == 4
    assert [r["value"] for r in rows] == ["1/2", "1", "3/2", "2"]
    assert [r["dispersion_heavy_k2"] for r in rows] == ["16", "4", "16/9", "1"]


def test_scan_csv_and_error_rows(capsys):
    # vev sweep crosses the critical coupling for eps5 = +1
    code, out = run(
        capsys, "scan", "--param", "vev", "--from", "1/10", "--to", "2",
        "--steps", "3", "--eps5", "+1", "--format", "csv",
    )
    assert code == 1
    lines = out.strip().splitlines()
    assert lines[0].startswith("param,value,eps5,")
    assert len(lines) == 4
    assert any(",error," in line for line in lines[1:])
    assert any(",ok," in line for line in lines[1:])


def test_scan_rejects_bad_param(capsys):
    assert main(["scan", "--param", "mass", "--from", "0", "--to", "1",
                 "--steps", "2"]) == 2


def test_check_all_deterministic(tmp_path):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert main(["check", "all", "--seed", "42", "--out", str(first)]) == 0
    assert main(["check", "all", "--seed", "42", "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    doc = json.loads(first.read_text())
    assert doc["summary"]["failed"] == 0
    # reports arrive sorted by check name, then parameters
    keys = [(r["check"], json.dumps(r["params"], sort_keys=True))
            for r in doc["reports"]]
    assert keys == sorted(keys)
    # timings stay null so reruns are byte-identical
    assert all(r["duration_ms"] is None for r in doc["reports"])


def test_tampered_fixture_names_triple(tmp_path, capsys):
    alg = build_deformed_algebra(1, -1)
    doc = alg.to_json()
    bad = copy.deepcopy(doc)
    names = bad["basis"]
    for key, entry in bad["brackets"].items():
        i, j = map(int, key.split(","))
        if names[i] == "P0" and names[j] == "x0":
            for _, terms in entry:
                for term in terms:
                    term[2] = "2"  # iC -> 2iC
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out = run(
        capsys, "verify", "algebra", "--eps4", "1", "--eps5", "-1",
        "--fixture", str(path),
    )
    assert code == 1
    report = json.loads(out)
    fixture_reports = [r for r in report["reports"] if r["check"] == "jacobi_fixture"]
    assert fixture_reports[0]["status"] == "fail"
    assert fixture_reports[0]["details"]["first_violation"] == ["M01", "P0", "x1"]
    assert fixture_reports[0]["details"]["violations"] == 12


def test_intact_fixture_passes(tmp_path, capsys):
    alg = build_deformed_algebra(1, -1)
    path = tmp_path / "good.json"
    path.write_text(json.dumps(alg.to_json()))
    code, _ = run(
        capsys, "verify", "algebra", "--eps4", "1", "--eps5", "-1",
        "--fixture", str(path),
    )
    assert code == 0


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"eps5": -1, "ell": "2", "seed": 9}))
    code, out = run(capsys, "modes", "--config", str(cfg))
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["ell"] == "2"
    assert doc["config"]["seed"] == 9

    code, out = run(capsys, "modes", "--config", str(cfg), "--ell", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["ell"] == "1"  # flag wins


def test_unknown_config_key(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"epsilon": 1}))
    code, _ = run(capsys, "modes", "--config", str(cfg))
    assert code == 2


def test_missing_config_file(capsys):
    code, _ = run(capsys, "modes", "--config", "/nonexistent/cfg.json")
    assert code == 2
