"""Command-line contract: output formats, exit codes, determinism."""

import csv
import io
import json
import os
import subprocess
import sys
from pathlib import Path

from recurring.cli import PRIME_REPORT_FIELDS
from recurring.models import PrimeReport

SRC = Path(__file__).resolve().parent.parent / "src"


def run_cli(*args):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "recurring", *args],
        capture_output=True,
        text=True,
        env=env,
    )


class TestAnalyze:
    def test_json_line_schema(self):
        proc = run_cli("analyze", "--t", "1,1", "--p", "5", "--format", "json")
        assert proc.returncode == 0
        lines = proc.stdout.strip().splitlines()
        assert len(lines) == 1
        payload = json.loads(lines[0])
        assert list(payload) == PRIME_REPORT_FIELDS
        report = PrimeReport.model_validate(payload)
        assert report.period == 20
        assert report.classification == "ramified"
        assert report.thm67_agree is True
        # round trip: parse -> serialize -> parse
        assert json.loads(report.model_dump_json()) == payload

    def test_multiple_primes(self):
        proc = run_cli("analyze", "--t", "1,1", "--p", "2,3,5,7,11", "--format", "json")
        periods = [json.loads(line)["period"] for line in proc.stdout.strip().splitlines()]
        assert periods == [3, 8, 20, 16, 10]

    def test_table_default(self):
        proc = run_cli("analyze", "--t", "1", "--p", "7")
        assert proc.returncode == 0
        assert "period" in proc.stdout
        assert " 1 " in proc.stdout or "1  " in proc.stdout

    def test_trivial_core_period_one(self):
        proc = run_cli("analyze", "--t", "1", "--p", "7", "--format", "json")
        assert json.loads(proc.stdout)["period"] == 1

    def test_degenerate_core_exit_3(self):
        proc = run_cli("analyze", "--t", "1,0", "--p", "5")
        assert proc.returncode == 3
        assert "error" in proc.stderr

    def test_usage_error_exit_2(self):
        assert run_cli("analyze", "--t", "1,1").returncode == 2
        assert run_cli("analyze", "--t", "a,b", "--p", "5").returncode == 2
        assert run_cli("bogus").returncode == 2

    def test_csv_columns(self):
        proc = run_cli("analyze", "--t", "1,1", "--p", "5,11", "--format", "csv")
        rows = list(csv.reader(io.StringIO(proc.stdout)))
        assert rows[0] == PRIME_REPORT_FIELDS
        assert len(rows) == 3
        by_name = dict(zip(rows[0], rows[1]))
        assert by_name["p"] == "5"
        assert by_name["factors"] == "(x+2)^2"
        assert by_name["thm67_agree"] == "true"

    def test_out_file(self, tmp_path):
        target = tmp_path / "report.jsonl"
        proc = run_cli(
            "analyze", "--t", "1,1", "--p", "5", "--format", "json", "--out", str(target)
        )
        assert proc.returncode == 0
        assert proc.stdout == ""
        assert json.loads(target.read_text())["period"] == 20


class TestSweep:
    def test_fibonacci_sweep_counts(self):
        proc = run_cli("sweep", "--t", "1,1", "--pmax", "31", "--format", "json")
        assert proc.returncode == 0
        lines = proc.stdout.strip().splitlines()
        reports = [json.loads(line) for line in lines[:-1]]
        summary = json.loads(lines[-1])["summary"]
        assert len(reports) == 11
        assert [r["p"] for r in reports] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
        assert [r["p"] for r in reports if r["classification"] == "ramified"] == [5]
        assert summary["thm67_agreed"] == summary["thm67_checked"] == 11

    def test_gaussian_ramifies_only_at_two(self):
        proc = run_cli("sweep", "--t", "0,-1", "--pmax", "13", "--format", "json")
        reports = [json.loads(line) for line in proc.stdout.strip().splitlines()[:-1]]
        assert [r["p"] for r in reports if r["classification"] == "ramified"] == [2]

    def test_trivial_core(self):
        proc = run_cli("sweep", "--t", "1", "--pmax", "10", "--format", "json")
        reports = [json.loads(line) for line in proc.stdout.strip().splitlines()[:-1]]
        assert all(r["period"] == 1 for r in reports)

    def test_pmax_bound_usage_error(self):
        assert run_cli("sweep", "--t", "1,1", "--pmax", "2000000").returncode == 2

    def test_csv_summary_goes_to_stderr(self):
        proc = run_cli("sweep", "--t", "1,1", "--pmax", "13", "--format", "csv")
        rows = list(csv.reader(io.StringIO(proc.stdout)))
        assert rows[0] == PRIME_REPORT_FIELDS
        assert len(rows) == 7  # header + primes 2..13
        assert "summary:" in proc.stderr

    def test_thread_env_does_not_change_output(self):
        base = run_cli("sweep", "--t", "1,1", "--pmax", "31", "--format", "json")
        env = dict(os.environ)
        env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
        env["RECURRING_THREADS"] = "4"
        threaded = subprocess.run(
            [sys.executable, "-m", "recurring", "sweep", "--t", "1,1", "--pmax", "31",
             "--format", "json"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert threaded.stdout == base.stdout


class TestVerify:
    def test_passing_campaign(self):
        proc = run_cli(
            "verify", "--k", "2", "--coeff-bound", "4", "--pmax", "13",
            "--trials", "15", "--seed", "42",
        )
        assert proc.returncode == 0
        assert "PASS" in proc.stdout

    def test_seeded_byte_identical(self):
        args = ("verify", "--k", "3", "--coeff-bound", "3", "--pmax", "11",
                "--trials", "8", "--seed", "9", "--format", "json")
        assert run_cli(*args).stdout == run_cli(*args).stdout

    def test_degenerate_k_smoke(self):
        proc = run_cli("verify", "--k", "1", "--trials", "5", "--pmax", "7", "--seed", "3")
        assert proc.returncode == 0


class TestExitCodes:
    def test_property_failure_is_exit_1(self, monkeypatch, capsys):
        """A campaign that finds a counterexample must exit 1."""
        from recurring import cli
        from recurring.models import VerifyFailure, VerifyReport

        def fake_verify(k, coeff_bound, pmax, trials, seed):
            return VerifyReport(
                k=k, coeff_bound=coeff_bound, pmax=pmax, trials=trials, seed=seed,
                cores_checked=1, pairs_checked=1,
                failures=[VerifyFailure(t=[1, 1], p=5, kind="period-ramification",
                                        detail="forced")],
                passed=False,
            )

        monkeypatch.setattr(cli, "run_verify", fake_verify)
        code = cli.main(["verify", "--k", "2", "--trials", "1", "--seed", "0"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL" in out

    def test_internal_inconsistency_is_exit_1(self, monkeypatch, capsys):
        from recurring import cli
        from recurring.errors import InternalInconsistency

        def boom(t, p):
            raise InternalInconsistency("forced disagreement")

        monkeypatch.setattr(cli, "build_prime_report", boom)
        code = cli.main(["analyze", "--t", "1,1", "--p", "5"])
        assert code == 1
        assert "cross-check" in capsys.readouterr().err

    def test_non_prime_modulus_exit_3(self):
        assert run_cli("analyze", "--t", "1,1", "--p", "9").returncode == 3
        assert run_cli("sequence", "--t", "1,1", "--from", "0", "--to", "3",
                       "--mod", "6").returncode == 3


class TestSequence:
    def test_fibonacci_and_lucas(self):
        proc = run_cli("sequence", "--t", "1,1", "--from", "0", "--to", "5")
        lines = proc.stdout.strip().splitlines()
        assert [line.split()[1] for line in lines] == [
            "F=1", "F=1", "F=2", "F=3", "F=5", "F=8"
        ]
        assert lines[5].split()[2] == "G=11"

    def test_periodic_negative_range(self):
        proc = run_cli("sequence", "--t", "0,-1", "--from", "-4", "--to", "4")
        fs = [line.split()[1] for line in proc.stdout.strip().splitlines()]
        assert fs == ["F=1", "F=0", "F=-1", "F=0", "F=1", "F=0", "F=-1", "F=0", "F=1"]

    def test_backward_nonunit_exit_3(self):
        assert run_cli("sequence", "--t", "1,2", "--from", "-3", "--to", "0").returncode == 3

    def test_backward_mod_singular_exit_3(self):
        proc = run_cli("sequence", "--t", "1,5", "--from", "-3", "--to", "0", "--mod", "5")
        assert proc.returncode == 3

    def test_bad_range_exit_2(self):
        assert run_cli("sequence", "--t", "1,1", "--from", "3", "--to", "1").returncode == 2


class TestOrbit:
    def test_reference_orbit_reproduction(self):
        proc = run_cli("orbit", "--t", "1,1", "--p", "2", "--m", "1,0")
        assert proc.returncode == 0
        assert proc.stdout == "(1, 0)\n(0, 1)\n(1, 1)\nlength 3 (preperiod 0, period 3)\n"

    def test_json_format(self):
        proc = run_cli("orbit", "--t", "1,1", "--p", "2", "--m", "1,0", "--format", "json")
        body = json.loads(proc.stdout)
        assert body["states"] == [[1, 0], [0, 1], [1, 1]]

    def test_singular_orbit_has_preperiod(self):
        proc = run_cli("orbit", "--t", "1,2", "--p", "2", "--m", "1,0", "--format", "json")
        body = json.loads(proc.stdout)
        assert body["preperiod"] == 1 and body["period"] == 1
