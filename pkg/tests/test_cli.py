from __future__ import annotations

import json
import subprocess
import sys

import pytest

from mik.certifier import Certificate, validate_certificate
from mik.cli import main, run_command

SIX = "x1*x2*x3, x1*x2*x4, x1*x3*x5, x1*x4*x6, x1*x5*x6, x2*x3*x6, x2*x4*x5, x2*x5*x6, x3*x4*x5, x3*x4*x6"
C8 = ", ".join("*".join(f"x{(i + k) % 8 + 1}" for k in range(4)) for i in range(8))


def run(*argv):
    return run_command(list(argv))


def test_check_spp_counterexample():
    code, rep = run("check", "spp", "--ideal", SIX, "--max-power", "2")
    assert code == 1
    assert rep["verdict"]["witness"]["power"] == 2
    assert rep["schema_version"] == 1 and rep["command"] == "check spp"


def test_certify_c8():
    code, rep = run("certify", "ntf", "--ideal", C8)
    assert code == 0
    cert = rep["certificate"]
    assert cert["rule"] == "LinearSplit" and (cert["data"]["i"], cert["data"]["j"]) == (4, 8)
    assert validate_certificate(Certificate.from_dict(cert))


def test_power_zero_is_unit():
    code, rep = run("op", "power", "--ideal", "x1, x2", "--k", "0")
    assert code == 0 and rep["result"] == "1"


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("op", "sum", "--ideal", "x1", "--ideal2", "x2"), "x2, x1"),
        (("op", "product", "--ideal", "x1, x2", "--ideal2", "x1, x2"), "x2^2, x1*x2, x1^2"),
        (("op", "intersect", "--ideal", "x1*x2, x2*x3", "--ideal2", "x1*x3"), "x1*x2*x3"),
        (("op", "colon", "--ideal", "x1*x2, x2*x3", "--ideal2", "x2", "--vars", "3"), "x3, x1"),
        (("op", "delete", "--ideal", "x1*x2, x3", "--index", "1"), "x3"),
        (("op", "contract", "--ideal", "x1*x2, x2*x3", "--index", "2"), "x3, x1"),
        (("op", "sympower", "--ideal", "x1*x2, x2*x3, x1*x3", "--k", "2"), None),
        (("op", "dual", "--ideal", "x1*x2"), "x2, x1"),
    ],
)
def test_ops(argv, expected):
    code, rep = run(*argv)
    assert code == 0
    if expected is not None:
        assert rep["result"] == expected


def test_prime_listing():
    code, rep = run("op", "ass", "--ideal", "x1^2, x1*x2")
    assert code == 0 and rep["result"] == [[1], [1, 2]]
    code, rep = run("op", "minprimes", "--ideal", "x1*x2, x2*x3, x1*x3")
    assert rep["result"] == [[1, 2], [1, 3], [2, 3]]


def test_check_exit_codes():
    assert run("check", "ntf", "--clutter", "{1,2},{2,3},{1,3}", "--max-power", "2")[0] == 1
    assert run("check", "ntf", "--clutter", "{1,2},{2,3}")[0] == 0
    assert run("check", "packing", "--clutter", "{1,2},{2,3},{1,3}")[0] == 1
    assert run("check", "persistence", "--ideal", "x1, x2")[0] == 0
    assert run("certify", "ntf", "--ideal", C8, "--depth", "0", "--max-power", "2")[0] == 2


def test_filter():
    code, rep = run("filter", "cc", "--ideal", "x6*x7*x8, x5*x6*x7, x1*x2*x7, x1*x2*x3, x3*x4*x5*x6, x2*x3*x4*x5")
    assert code == 0 and rep["result"]["reason"] == "cor43"
    assert run("filter", "cc", "--clutter", "{1,2},{2,3},{1,3}")[1]["result"]["reason"] == "no-packing"


def test_parse_errors_exit_65():
    code, rep = run("op", "power", "--ideal", "x1**x2", "--k", "2")
    assert code == 65 and rep["error"] == "parse" and rep["position"] == 3
    assert run("check", "spp", "--ideal", "x9", "--vars", "3")[0] == 65


def test_usage_errors_exit_64(capsys):
    assert run("op", "power", "--ideal", "x1")[0] == 64  # missing --k
    assert run("certify", "ntf", "--ideal", "x1^2")[0] == 64  # not square-free
    assert run("enumerate", "--n", "9")[0] == 64
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 64
    with pytest.raises(SystemExit) as info:
        main(["check", "spp"])
    assert info.value.code == 64


def test_enumerate_listing_and_sweep():
    code, rep = run("enumerate", "--n", "2")
    assert code == 0 and rep["count"] == 4
    code, rep = run("enumerate", "--n", "3", "--iso")
    assert rep["count"] == 8
    code, rep = run("enumerate", "--n", "3", "--property", "ntf", "--max-power", "3", "--jobs", "1")
    assert code == 1 and rep["result"]["tallies"]["fails"] == 1


def test_mik_jobs_overrides_flag(monkeypatch):
    monkeypatch.setenv("MIK_JOBS", "2")
    code, rep = run("enumerate", "--n", "3", "--property", "spp", "--jobs", "1")
    assert code == 0 and rep["parameters"]["jobs"] == 2


def test_report_round_trip():
    # re-running the command on the embedded input reproduces the verdict
    code, rep = run("check", "ntf", "--ideal", "x3*x6*x7, x2*x5, x1*x4, x1*x5*x6, x2*x4*x6, x3*x4*x5, x1*x2*x3",
                    "--max-power", "2")
    code2, rep2 = run("check", "ntf", "--ideal", rep["input"], "--vars", str(rep["vars"]), "--max-power", "2")
    assert code == code2 == 1 and rep["verdict"] == rep2["verdict"]


def test_out_file(tmp_path):
    out = tmp_path / "r.json"
    assert main(["op", "sum", "--ideal", "x1", "--ideal2", "x2", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["result"] == "x2, x1" and out.read_text().endswith("\n")


def test_repro_cases():
    for case in ("spp-6var", "exa-ntf-1", "c8"):
        code, rep = run("repro", "--case", case)
        assert code == 0 and rep["passed"], rep


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mik", "check", "spp", "--ideal", SIX, "--max-power", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["verdict"]["status"] == "fails"
