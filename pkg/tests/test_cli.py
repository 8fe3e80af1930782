import json
import subprocess
import sys

import pytest

from cellular_jm.cli import ConfigError, main


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "cellular_jm", *args], capture_output=True, text=True
    )


def test_verify_s3_json(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "symmetric-group", "--n", "3", "--json", str(out)]) == 0
    report = json.loads(out.read_text())
    assert set(report) == {"schemaVersion", "config", "checks", "dimensions", "gamma",
                           "contents", "orientation", "timingMs"}
    assert report["schemaVersion"] == 1
    assert report["timingMs"] is None
    assert [c["name"] for c in report["checks"]] == [
        "cellularity", "jm", "separation", "seminormal", "center", "main-theorem", "lemmas",
    ]
    assert all(c["status"] == "pass" for c in report["checks"])
    assert report["dimensions"] == {"algebra": 6, "center": 3, "symSpan": 3, "cells": 3}
    assert sorted(report["gamma"].values()) == sorted(["6", "2", "3/2", "1"])
    assert report["orientation"] == {"inForce": "reverse", "confirmed": ["reverse"]}


def test_checks_subset(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "hecke-a", "--n", "3", "--checks", "jm,separation",
                 "--json", str(out)]) == 0
    report = json.loads(out.read_text())
    assert [c["name"] for c in report["checks"]] == ["jm", "separation"]
    assert report["config"]["q"] == "2"
    assert report["gamma"] == {}


def test_ak_model_explicit_params(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "ariki-koike-model", "--n", "2", "--m", "2", "--q", "2",
                 "--u", "1,7", "--json", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["config"]["u"] == ["1", "7"]
    assert report["dimensions"]["center"] == 5
    lemmas = [c for c in report["checks"] if c["name"] == "lemmas"][0]
    assert set(lemmas["details"]["case_counts"]) <= {"case1", "case2"}


def test_counterexample_exit_code_and_report(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "counterexample", "--json", str(out)]) == 0
    report = json.loads(out.read_text())
    status = {c["name"]: c["status"] for c in report["checks"]}
    assert status["main-theorem"] == "pass"
    assert status["seminormal"] == "fail"
    mt = [c for c in report["checks"] if c["name"] == "main-theorem"][0]
    assert mt["details"]["conditionOne"] is False
    assert mt["details"]["conditionTwo"] is False
    assert mt["witness"] == ["lambda", "mu"]


@pytest.mark.parametrize("argv", [
    ["verify", "hecke-a", "--n", "3", "--q", "1"],
    ["verify", "hecke-a", "--n", "3", "--q", "0"],
    ["verify", "symmetric-group", "--n", "3", "--q", "2"],
    ["verify", "symmetric-group"],
    ["verify", "counterexample", "--n", "2"],
    ["verify", "ariki-koike-model", "--n", "2", "--m", "2", "--q", "2", "--u", "1,2"],
    ["verify", "ariki-koike-model", "--n", "2", "--m", "2", "--q", "2"],
    ["verify", "ariki-koike-model", "--n", "2", "--m", "2", "--q", "2", "--u", "1,x"],
    ["verify", "symmetric-group", "--n", "9"],
    ["verify", "symmetric-group", "--n", "3", "--checks", "bogus"],
])
def test_config_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert "invalid configuration" in capsys.readouterr().err


def test_params_output(capsys):
    assert main(["params", "--n", "2", "--m", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "n=2 m=2 q=2 u=(1,7)"
    assert out[1] == "separation polynomial nonzero: yes"
    assert [line.split(" = ")[1] for line in out[2:]] == ["1", "3", "-13/2", "-6", "-5"]


def test_timing_is_opt_in(tmp_path):
    out = tmp_path / "r.json"
    main(["verify", "symmetric-group", "--n", "2", "--timing", "--json", str(out)])
    assert isinstance(json.loads(out.read_text())["timingMs"], int)


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        proc = run_cli("verify", "symmetric-group", "--n", "3", "--json", str(path))
        assert proc.returncode == 0, proc.stderr
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point_exit_code():
    proc = run_cli("verify", "hecke-a", "--n", "3", "--q", "1")
    assert proc.returncode == 2
    proc = run_cli("verify", "symmetric-group", "--n", "2")
    assert proc.returncode == 0
    assert "symmetric-group" in proc.stdout


def test_config_error_is_value_error():
    assert issubclass(ConfigError, ValueError)
