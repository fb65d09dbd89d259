"""Command-line behavior: golden outputs, exit codes, reflection reporting."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from linform.cli import main

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def data(name: str) -> str:
    return str(DATA / name)


GOLDEN_RUNS = [
    ("image_psi.json", 0, ["image", "--input", data("psi.json")]),
    ("repfn_psi.json", 0, ["repfn", "--input", data("psi.json")]),
    ("modrep_psi.json", 0, ["modrep", "--input", data("psi.json"), "-m", "4"]),
    ("cyclotomy_psi.json", 0, ["cyclotomy", "--input", data("psi.json"), "-m", "4", "-t", "1"]),
    ("check_pair.json", 0, ["check", "--input", data("pair.json")]),
    ("check_gapset.json", 1, ["check", "--input", data("gapset.json")]),
    (
        "extend_pair.json",
        0,
        ["extend", "--input", data("extend.json"), "--seed", "0:1", "--from", "-3", "--to", "3"],
    ),
    ("period_pair.json", 0, ["period", "--input", data("extend.json"), "--seed", "0:1"]),
    ("solve_pair.json", 0, ["solve", "--input", data("solve.json"), "-N", "2"]),
    ("stabilize_pair.json", 0, ["stabilize", "--input", data("extend.json")]),
    ("image_psi.tsv", 0, ["image", "--input", data("psi.json"), "--format", "tsv"]),
    ("check_gapset.tsv", 1, ["check", "--input", data("gapset.json"), "--format", "tsv"]),
]


class TestGoldenOutputs:
    @pytest.mark.parametrize("golden,expected_code,argv", GOLDEN_RUNS, ids=lambda g: str(g))
    def test_output_matches_golden(self, capsys, golden, expected_code, argv):
        code, out, _ = run(capsys, *argv)
        assert code == expected_code
        assert out == (GOLDEN / golden).read_text()


EXIT_TABLE = [
    (0, ["image", "--input", data("pair.json")]),
    (0, ["check", "--input", data("pair.json")]),
    (1, ["check", "--input", data("gapset.json")]),
    (0, ["cyclotomy", "--input", data("psi.json"), "-m", "4", "-t", "1"]),
    (1, ["cyclotomy", "--input", data("psi.json"), "-m", "2", "-t", "1"]),
    (1, ["solve", "--input", data("extend.json"), "-t", "3", "-N", "0"]),
    (1, ["extend", "--input", data("triple.json"), "--seed", "0:11", "--from", "0", "--to", "5"]),
    (1, ["period", "--input", data("purity.json"), "--seed", "0:10"]),
    (1, ["stabilize", "--input", data("extend.json"), "-t", "3"]),
    (0, ["stabilize", "--input", data("degenerate.json")]),
    # usage and data errors, including refused computations, all exit 2
    (2, ["image", "--input", data("missing.json")]),
    (2, ["image", "--input", data("badfield.json")]),
    (2, ["modrep", "--input", data("psi.json")]),
    (2, ["extend", "--input", data("extend.json"), "--seed", "xx", "--from", "0", "--to", "1"]),
    (2, ["extend", "--input", data("extend.json"), "--seed", "0:2", "--from", "0", "--to", "1"]),
    (2, ["extend", "--input", data("degenerate.json"), "--seed", "0:1", "--from", "0", "--to", "1"]),
    (2, ["period", "--input", data("triple.json"), "--seed", "0:10", "--max-d", "1"]),
    (2, ["period", "--input", data("triple.json"), "--seed", "0:1"]),
    (2, ["solve", "--input", data("solve.json"), "-N", "-1"]),
    (2, ["solve", "--input", data("solve.json"), "-t", "1", "-N", "1"]),
    (2, ["check", "--input", data("extend.json")]),
    (2, ["check", "--input", data("psi.json"), "-t", "1"]),
    (2, ["stabilize", "--input", data("extend.json"), "-N", "0"]),
]


class TestExitCodes:
    @pytest.mark.parametrize("expected,argv", EXIT_TABLE, ids=lambda v: str(v))
    def test_exit_code(self, capsys, expected, argv):
        code, out, err = run(capsys, *argv)
        assert code == expected
        if expected == 2:
            assert out == ""
            assert err.startswith("error:")

    def test_exhausted_budget_reports_status_and_exits_2(self, capsys):
        # Not a verdict: the search was cut short, so the exit code says
        # "no answer" while the report still explains what happened.
        code, out, _ = run(
            capsys, "solve", "--input", data("solve.json"), "-N", "2", "--max-nodes", "1"
        )
        assert code == 2
        assert json.loads(out)["status"] == "resource_limit"

    def test_format_flag_never_changes_exit_code(self, capsys):
        for argv in (["check", "--input", data("gapset.json")],):
            json_code, _, _ = run(capsys, *argv)
            tsv_code, _, _ = run(capsys, *argv, "--format", "tsv")
            assert json_code == tsv_code == 1


class TestReports:
    def test_reflected_check_maps_violation_back(self, capsys):
        code, out, _ = run(capsys, "check", "--input", data("reflected.json"))
        assert code == 1
        report = json.loads(out)
        assert report["reflected"] is True
        assert report["verdict"] is False
        assert report["violations"][0]["n"] == -1

    def test_reflected_solve_maps_target_overrides(self, capsys, tmp_path):
        # Original orientation constrains n=1 to zero representations; after
        # normalization that pins -1, and the witness satisfies the original.
        document = {
            "u": [-1],
            "v": -1,
            "A": [[0]],
            "f": {"default": 1, "overrides": {"1": 0}},
        }
        path = tmp_path / "reflected_solve.json"
        path.write_text(json.dumps(document))
        code, out, _ = run(capsys, "solve", "--input", str(path), "-N", "1")
        assert code == 0
        report = json.loads(out)
        assert report["reflected"] is True
        assert report["witness"] == [0, 1]

    def test_solved_report_schema(self, capsys):
        _, out, _ = run(capsys, "solve", "--input", data("solve.json"), "-N", "2")
        report = json.loads(out)
        assert list(report) == [
            "status",
            "nodes",
            "N",
            "candidate_lo",
            "candidate_hi",
            "reflected",
            "witness",
        ]

    def test_unsat_report_has_no_witness(self, capsys):
        code, out, _ = run(capsys, "solve", "--input", data("extend.json"), "-t", "3", "-N", "0")
        assert code == 1
        report = json.loads(out)
        assert "witness" not in report
        assert report["status"] == "unsat"

    def test_period_failure_names_index(self, capsys):
        code, out, _ = run(capsys, "period", "--input", data("purity.json"), "--seed", "0:10")
        assert code == 1
        report = json.loads(out)
        assert report == {"verdict": False, "inconsistent_at": -2, "reflected": False}

    def test_extend_failure_names_index(self, capsys):
        code, out, _ = run(
            capsys, "extend", "--input", data("triple.json"), "--seed", "0:11",
            "--from", "0", "--to", "5",
        )
        assert code == 1
        assert json.loads(out)["inconsistent_at"] == 2

    def test_solve_with_override_target(self, capsys):
        code, out, _ = run(capsys, "solve", "--input", data("overrides.json"), "-N", "1")
        assert code == 0
        report = json.loads(out)
        witness = report["witness"]
        assert witness == [-1, 0]

    def test_t_flag_overrides_file_value(self, capsys):
        # pair.json carries t=1; forcing t=2 with B=(2,{0}) must fail.
        code, out, _ = run(capsys, "check", "--input", data("pair.json"), "-t", "2")
        assert code == 1
        assert json.loads(out)["t"] == 2

    def test_notes_go_to_stderr_not_stdout(self, capsys):
        _, out, err = run(capsys, "check", "--input", data("pair.json"))
        assert json.loads(out)["verdict"] is True
        assert "t-complementing" in err


class TestEntryPoints:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "linform", "check", "--input", data("pair.json")],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["verdict"] is True

    def test_json_output_reparses(self, capsys):
        for golden, expected_code, argv in GOLDEN_RUNS:
            if golden.endswith(".tsv"):
                continue
            _, out, _ = run(capsys, *argv)
            json.loads(out)
