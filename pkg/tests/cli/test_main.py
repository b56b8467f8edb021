import json

import pytest
from pytest_mock import MockerFixture

from uc_spectra import InternalInconsistency
from uc_spectra.cli.main import EXIT_INPUT, EXIT_INTERNAL, EXIT_MISMATCH, EXIT_OK, main
from uc_spectra.models.spectrum import Spectrum
from uc_spectra.ramanujan.check import ramanujan_check


def run(capsys, *argv: str):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_report_z12_json(capsys):
    code, out, _ = run(capsys, "report", "Z/12")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["ring"] == "Z/4 × Z/3"
    assert doc["order"] == 12
    assert doc["unit_count"] == 4
    assert doc["energy"]["energy"] == 52
    assert doc["verdicts"]["unitary"]["theorem"]["ramanujan"] is True
    assert doc["verdicts"]["unitary"]["direct"]["ramanujan"] is True
    assert doc["zn"]["n"] == 12
    assert doc["moments"]["unitary"][3] == 576
    assert "oracle" not in doc


def test_report_json_verdicts_can_be_recomputed(capsys):
    code, out, _ = run(capsys, "report", "GF(4) x Z/9")
    assert code == EXIT_OK
    doc = json.loads(out)
    unitary = Spectrum.from_json_dict(doc["spectra"]["unitary"])
    assert unitary.order == doc["order"]
    recomputed = ramanujan_check(unitary, doc["unit_count"])
    assert recomputed.ramanujan == doc["verdicts"]["unitary"]["direct"]["ramanujan"]
    assert recomputed.ramanujan == doc["verdicts"]["unitary"]["theorem"]["ramanujan"]


def test_report_table(capsys):
    code, out, _ = run(capsys, "report", "GF(3)", "--format", "table")
    assert code == EXIT_OK
    assert out.startswith("ring        GF(3)\n")
    assert "spectrum(unitary)  {2:1, -1:2}" in out


def test_report_csv(capsys):
    code, out, _ = run(capsys, "report", "GF(3)", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines()[:3] == ["graph,value,mult", "unitary,2,1", "unitary,-1,2"]


def test_report_with_oracle(capsys):
    code, out, _ = run(capsys, "report", "Z/12", "--oracle")
    assert code == EXIT_OK
    checks = json.loads(out)["oracle"]
    assert checks
    assert all(check["expected"] == check["actual"] for check in checks)


def test_report_oracle_mismatch_exits_two(capsys, mocker: MockerFixture):
    mocker.patch("uc_spectra.cli.report.count_cycles", return_value=-1)
    code, _, _ = run(capsys, "report", "GF(5)", "--oracle")
    assert code == EXIT_MISMATCH


def test_report_exports_edge_list(capsys, tmp_path):
    path = tmp_path / "z12.txt"
    code, _, _ = run(capsys, "report", "Z/12", "--export-graph", str(path))
    assert code == EXIT_OK
    lines = path.read_text().splitlines()
    assert lines[0] == "12 24"
    assert len(lines) == 25


@pytest.mark.parametrize(
    "argv",
    [
        ["report", "local(6,2)"],
        ["report", "local(16,2)"],
        ["report", "Q/5"],
        ["report", "Z/12", "--moments", "-1"],
        ["enumerate"],
        ["frobnicate"],
        ["report"],
    ],
)
def test_input_errors_exit_one(capsys, argv):
    with pytest.raises(SystemExit) as raised:
        code = main(argv)
        raise SystemExit(code)
    assert raised.value.code == EXIT_INPUT


def test_internal_errors_exit_three(capsys, mocker: MockerFixture):
    mocker.patch(
        "uc_spectra.cli.main.build_report", side_effect=InternalInconsistency("negative count")
    )
    code, _, err = run(capsys, "report", "Z/12")
    assert code == EXIT_INTERNAL
    assert "InternalInconsistency" in err


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--max", "4")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == (
        "ring,order,unit_count,ramanujan,unitary_case,complement_ramanujan,"
        "complement_case,line_energy,hyperenergetic"
    )
    assert len(lines) == 6
    assert lines[1].startswith("GF(2),2,1,true,")


def test_enumerate_complement_ramanujan_moduli(capsys):
    code, out, _ = run(
        capsys,
        "enumerate",
        "--max-order",
        "30",
        "--zn-only",
        "--filter",
        "complement-ramanujan",
        "--format",
        "json",
    )
    assert code == EXIT_OK
    moduli = {int(row["ring"][2:]) for row in json.loads(out)}
    prime_powers = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29}
    assert moduli == prime_powers | {6, 10, 12, 15, 18, 21, 24, 30}


def test_enumerate_table(capsys):
    code, out, _ = run(capsys, "enumerate", "--max", "3", "--format", "table")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].split()[0] == "ring"
    assert set(lines[1]) <= {"-", " "}
    assert len(lines) == 4


@pytest.mark.parametrize("suite", ["spectra", "moments", "cycles", "ramanujan", "zn"])
def test_verify_small_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--max", "12")
    assert code == EXIT_OK
    assert out.startswith(f"[{suite}] checked ")
    assert "0 mismatches" in out


def test_verify_energy_reports_findings(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "energy", "--max", "16")
    assert code == EXIT_OK
    assert "[energy] 2 findings" in out


def test_verify_energy_strict_paper_fails(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "energy", "--max", "16", "--strict-paper")
    assert code == EXIT_MISMATCH
    assert "2 mismatches" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "zn", "--max", "20", "--format", "json")
    assert code == EXIT_OK
    (result,) = json.loads(out)
    assert result["suite"] == "zn"
    assert result["checked"] == 19
    assert result["failures"] == []


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--max", "64"],
        ["enumerate", "--max", "300", "--zn-only", "--format", "json"],
        ["verify", "--suite", "energy", "--max", "32", "--format", "json"],
    ],
)
def test_output_does_not_depend_on_worker_count(capsys, argv):
    outputs = [run(capsys, *argv, "--workers", workers)[1] for workers in ("1", "4", "4")]
    assert outputs[0]
    assert outputs[0] == outputs[1] == outputs[2]


def test_verify_energy_lists_audit_rows(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "energy", "--max", "8")
    assert code == EXIT_OK
    assert "FINDING GF(2) × GF(2)[x]/x^2: energy" in out
