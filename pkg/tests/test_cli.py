"""Command-line interface: formats, exit codes, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from djphase.cli import main
import djphase.verify


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSynth:
    def test_text_output(self, capsys):
        code, out, err = run_cli(capsys, "synth", "--truth", "01010110")
        assert code == 0
        assert out == "qubits 3\nz 3\ncz 1 2\n"
        assert err == ""

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "synth", "--truth", "01010110", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["truth_table"] == "01010110"
        assert payload["anf"] == "x3 + x1*x2"
        assert payload["type"] == 2
        assert payload["gate_counts"] == {"z": 1, "cz": 1, "mcz": 0, "h": 0}
        assert payload["dropped_global_sign"] is False

    def test_json_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "synth", "--truth", "00010111", "--format", "json")
        _, second, _ = run_cli(capsys, "synth", "--truth", "00010111", "--format", "json")
        assert first == second

    def test_truth_file(self, capsys, tmp_path):
        path = tmp_path / "tables.txt"
        path.write_text("# a comment\n01010110\n\n00001111\n", encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "synth", "--truth-file", str(path), "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert [row["truth_table"] for row in payload] == ["01010110", "00001111"]

    def test_truth_file_text_blocks(self, capsys, tmp_path):
        path = tmp_path / "tables.txt"
        path.write_text("01010110\n00001111\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "synth", "--truth-file", str(path))
        assert code == 0
        assert "# table 01010110" in out
        assert "# table 00001111" in out

    def test_truth_file_bad_line_aborts(self, capsys, tmp_path):
        path = tmp_path / "tables.txt"
        path.write_text("01010110\n0101x\n", encoding="utf-8")
        code, out, err = run_cli(capsys, "synth", "--truth-file", str(path))
        assert code == 2
        assert out == ""
        assert err.startswith("error:")

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "synth", "--truth-file", "/nonexistent/x.txt")
        assert code == 2
        assert err.startswith("error:")

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "circuit.txt"
        code, out, _ = run_cli(
            capsys, "synth", "--truth", "01010110", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text(encoding="utf-8") == "qubits 3\nz 3\ncz 1 2\n"


class TestRun:
    def test_refined_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "run", "--truth", "00000000", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] == "constant"
        assert payload["mode"] == "refined"
        assert payload["zero_amplitude"] == pytest.approx(1.0, abs=1e-9)
        assert len(payload["probabilities"]) == 8

    def test_histogram(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "run",
            "--truth",
            "01010110",
            "--shots",
            "100",
            "--seed",
            "9",
            "--format",
            "json",
        )
        assert code == 0
        payload = json.loads(out)
        hist = payload["histogram"]
        assert sum(hist.values()) == 100
        assert all(len(k) == 3 and set(k) <= {"0", "1"} for k in hist)

    def test_histogram_seed_deterministic(self, capsys):
        args = ("run", "--truth", "01010110", "--shots", "64", "--seed", "4", "--format", "json")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_original_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "run", "--truth", "01010110", "--mode", "original", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["mode"] == "original"
        assert payload["verdict"] == "balanced"
        assert payload["working_qubit_purity"] == pytest.approx(1.0, abs=1e-9)

    def test_classical_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "run", "--truth", "11111111", "--mode", "classical", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "truth_table": "11111111",
            "mode": "classical",
            "verdict": "constant",
            "queries_used": 5,
        }

    def test_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "run", "--truth", "01010110")
        assert code == 0
        assert "verdict: balanced" in out
        assert "queries_used: 1" in out

    def test_promise_violation_exit_code(self, capsys):
        code, out, err = run_cli(capsys, "run", "--truth", "01010111")
        assert code == 3
        assert out == ""
        assert "neither constant nor balanced" in err

    def test_bad_truth_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "run", "--truth", "0101x110")
        assert code == 2
        assert err.startswith("error:")


class TestEnumerate:
    def test_table_header(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "-n", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n = 3"
        assert lines[1] == "balanced functions: 70"
        assert lines[2] == "complement classes: 35"
        assert lines[3] == "type counts: 1:7  2:12  3:12  4:4"
        assert len([ln for ln in lines if ln and ln[0] in "01"]) == 35

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "-n", "3", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert set(payload) == {"n", "total_balanced", "classes", "type_counts", "rows"}
        assert payload["type_counts"] == {"1": 7, "2": 12, "3": 12, "4": 4}
        assert len(payload["rows"]) == 35
        row = payload["rows"][0]
        assert set(row) == {
            "truth_table",
            "anf",
            "circuit",
            "type",
            "gate_counts",
            "zero_amplitude",
            "fully_product",
        }
        assert all(r["zero_amplitude"] == 0.0 for r in payload["rows"])

    def test_n2_has_no_type_counts(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "-n", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["classes"] == 3
        assert payload["type_counts"] is None

    def test_json_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "enumerate", "-n", "3", "--format", "json")
        _, second, _ = run_cli(capsys, "enumerate", "-n", "3", "--format", "json")
        assert first == second

    def test_out_of_range(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "-n", "5")
        assert code == 2
        assert err.startswith("error:")


class TestEntangle:
    def test_json_counts(self, capsys):
        code, out, _ = run_cli(capsys, "entangle", "-n", "3", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["classes"] == 35
        assert payload["product_classes"] == 7
        assert payload["entangled_classes"] == 28
        assert len(payload["rows"]) == 35
        assert all(len(r["purities"]) == 3 for r in payload["rows"])

    def test_n2_all_product(self, capsys):
        # Every balanced 2-input function is linear, so nothing entangles.
        code, out, _ = run_cli(capsys, "entangle", "-n", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["product_classes"] == 3
        assert payload["entangled_classes"] == 0

    def test_table_output(self, capsys):
        code, out, _ = run_cli(capsys, "entangle", "-n", "3")
        assert code == 0
        assert "fully product: 7" in out
        assert "entangled: 28" in out


class TestVerify:
    def test_all_suites_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify")
        assert code == 0
        assert out.count("[PASS]") == 4
        assert "[FAIL]" not in out
        assert "4/4 suites passed" in out

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--json")
        assert code == 0
        payload = json.loads(out)
        assert [r["name"] for r in payload] == [
            "oracle-equivalence",
            "census",
            "refined-original-agreement",
            "formula-agreement",
        ]
        assert all(r["passed"] for r in payload)

    def test_corrupted_synthesis_is_caught(self, capsys, monkeypatch):
        from djphase.oracle_compiler import Circuit, PhaseFlip, synthesize as real_synthesize

        def broken(anf):
            c = real_synthesize(anf)
            return Circuit(c.n, c.gates + (PhaseFlip(1),))

        monkeypatch.setattr(djphase.verify, "synthesize", broken)
        code, out, _ = run_cli(capsys, "verify")
        assert code == 4
        assert "[FAIL] oracle-equivalence" in out


class TestArgHandling:
    def test_no_subcommand(self, capsys):
        assert run_cli(capsys, )[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run_cli(capsys, "bogus")[0] == 2

    def test_truth_and_file_are_exclusive(self, capsys, tmp_path):
        path = tmp_path / "t.txt"
        path.write_text("01010110\n", encoding="utf-8")
        code, _, _ = run_cli(
            capsys, "synth", "--truth", "01010110", "--truth-file", str(path)
        )
        assert code == 2

    def test_console_script_help(self):
        proc = subprocess.run(
            [sys.executable, "-m", "djphase.cli", "--help"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        for name in ("synth", "run", "enumerate", "entangle", "verify"):
            assert name in proc.stdout
