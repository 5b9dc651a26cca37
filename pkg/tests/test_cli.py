"""CLI contract: subcommands, exit codes, batch mode, determinism."""

import json

import pytest

from srcirc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestCheck:
    def test_pass_case(self, capsys):
        code, body = run_cli(capsys, "check", "--coeffs", "1,0", "--no-oracle")
        assert code == 0
        assert body["verdict"] == "SimpleOnCircle"
        assert body["delta"] == ["1", "1"]

    def test_fail_case_witness(self, capsys):
        code, body = run_cli(capsys, "check", "--coeffs", "1,-3", "--no-oracle")
        assert code == 1
        assert body["verdict"] == "OffCircle"
        assert body["witness"][0] == "2"

    def test_certified_upgrade(self, capsys):
        code, body = run_cli(capsys, "check", "--coeffs", "1,0,2", "--certify", "--no-oracle")
        assert code == 0
        assert body["verdict"] == "OnCircleNotSimple"
        assert body["certified"] is True

    def test_uncertified_multiple_root_fails_gate(self, capsys):
        code, body = run_cli(capsys, "check", "--coeffs", "1,0,2", "--no-oracle")
        assert code == 1
        assert body["verdict"] == "OnCircleNotSimple"

    def test_malformed_coeffs(self, capsys):
        code, body = run_cli(capsys, "check", "--coeffs", "1,,2")
        assert code == 3
        assert "error" in body

    def test_zero_leading_coefficient(self, capsys):
        code, body = run_cli(capsys, "check", "--coeffs", "0,1", "--no-oracle")
        assert code == 3

    def test_both_sources_rejected(self, capsys, tmp_path):
        f = tmp_path / "x.csv"
        f.write_text("1,0\n")
        code, body = run_cli(capsys, "check", "--coeffs", "1,0", "--file", str(f))
        assert code == 3

    def test_oracle_attached(self, capsys):
        code, body = run_cli(capsys, "check", "--coeffs", "1,1,1")
        assert code == 0
        assert body["oracle"]["classification"] == "AllSimpleOnT"

    def test_custom_grid(self, capsys):
        code, body = run_cli(capsys, "check", "--coeffs", "1,-3", "--grid", "3/2,2", "--no-oracle")
        assert code == 1


class TestOtherCommands:
    def test_delta(self, capsys):
        code, body = run_cli(capsys, "delta", "--coeffs", "1,1,1")
        assert code == 0 and body["delta"] == ["1", "5/3", "2", "5"]

    def test_delta_omega(self, capsys):
        code, body = run_cli(capsys, "delta", "--coeffs", "1,2", "--t", "2")
        assert body["delta"] == ["1", "9"]

    def test_hamiltonian(self, capsys):
        code, body = run_cli(capsys, "hamiltonian", "--coeffs", "1,0", "--log-q", "2")
        assert code == 0
        assert body["steps"] == [{"n": 1, "gamma": "1/2"}, {"n": 2, "gamma": "1/2"}]

    def test_hamiltonian_degenerate(self, capsys):
        code, body = run_cli(capsys, "hamiltonian", "--coeffs", "1,2")
        assert code == 2
        assert "error" in body

    def test_eval_zero(self, capsys):
        code, body = run_cli(capsys, "eval", "--coeffs", "1,0", "--z", "0")
        assert body["samples"][0]["A"] == [2.0, 0.0]
        assert body["samples"][0]["B"] == [0.0, 0.0]

    def test_reconstruct(self, capsys):
        code, body = run_cli(capsys, "reconstruct", "--gamma", "1/2,1/2", "--p1", "2")
        assert code == 0 and body["coeffs"] == ["1", "0"]

    def test_oracle(self, capsys):
        code, body = run_cli(capsys, "oracle", "--coeffs", "1,0,2")
        assert code == 0 and body["classification"] == "OnTWithMultiple"

    def test_certify_exit_codes(self, capsys):
        code, _ = run_cli(capsys, "certify", "--coeffs", "1,2")
        assert code == 0
        code2, _ = run_cli(capsys, "certify", "--coeffs", "1,-3")
        assert code2 == 1


class TestBatchAndOutput:
    def test_csv_batch(self, capsys, tmp_path):
        f = tmp_path / "batch.csv"
        f.write_text("1,0\n1,-3\n1,1,1\n")
        code, body = run_cli(capsys, "check", "--file", str(f), "--no-oracle")
        assert code == 1  # worst exit code wins
        assert [item["verdict"] for item in body] == ["SimpleOnCircle", "OffCircle", "SimpleOnCircle"]

    def test_json_batch(self, capsys, tmp_path):
        f = tmp_path / "batch.json"
        f.write_text(json.dumps([{"g": 1, "c": ["1", "0"]}, {"g": 2, "c": [1, 1, 1]}]))
        code, body = run_cli(capsys, "delta", "--file", str(f))
        assert code == 0
        assert body[1]["delta"] == ["1", "5/3", "2", "5"]

    def test_json_single_object(self, capsys, tmp_path):
        f = tmp_path / "one.json"
        f.write_text(json.dumps({"g": 1, "c": ["1", "-3"]}))
        code, body = run_cli(capsys, "check", "--file", str(f), "--no-oracle")
        assert code == 1 and body[0]["verdict"] == "OffCircle"

    def test_inconsistent_g_rejected(self, capsys, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text(json.dumps({"g": 3, "c": [1, 0]}))
        code, body = run_cli(capsys, "check", "--file", str(f))
        assert code == 3

    def test_bad_item_gets_exit_three(self, capsys, tmp_path):
        f = tmp_path / "mixed.csv"
        f.write_text("1,0\n0,1\n")
        code, body = run_cli(capsys, "check", "--file", str(f), "--no-oracle")
        assert code == 3
        assert body[0]["verdict"] == "SimpleOnCircle"
        assert "error" in body[1]

    def test_workers_preserve_order(self, capsys, tmp_path):
        f = tmp_path / "batch.csv"
        rows = ["1,0", "1,-3", "1,1,1", "1,0,2", "2,1,1"]
        f.write_text("\n".join(rows) + "\n")
        code1, seq = run_cli(capsys, "delta", "--file", str(f))
        code2, par = run_cli(capsys, "delta", "--file", str(f), "--workers", "2")
        assert seq == par

    def test_json_output_file(self, capsys, tmp_path):
        out = tmp_path / "out.json"
        code, body = run_cli(capsys, "check", "--coeffs", "1,0", "--no-oracle", "--json", str(out))
        assert json.loads(out.read_text()) == body

    def test_byte_determinism(self, capsys):
        code1 = main(["check", "--coeffs", "2,-1,3", "--no-oracle"])
        out1 = capsys.readouterr().out
        code2 = main(["check", "--coeffs", "2,-1,3", "--no-oracle"])
        out2 = capsys.readouterr().out
        assert out1 == out2 and code1 == code2

    def test_round_trip_hamiltonian_reconstruct(self, capsys):
        _, ham = run_cli(capsys, "hamiltonian", "--coeffs", "1,1,1")
        gammas = ",".join(step["gamma"] for step in ham["steps"])
        _, rec = run_cli(capsys, "reconstruct", "--gamma", gammas, "--p1", ham["e_zero"])
        assert rec["coeffs"] == ["1", "1", "1"]
