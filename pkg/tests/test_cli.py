import json
import subprocess
import sys

import pytest

from satake_kit.cli import main


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "satake_kit.cli", "kostka", "--type", "a2", "--lambda", "2,0", "--mu", "0,1"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == "q\n"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestKostkaCommand:
    def test_a2_adjoint(self, capsys):
        code, out, _ = run_cli(
            capsys, "kostka", "--type", "a2", "--lambda", "1,1", "--mu", "0,0"
        )
        assert code == 0
        assert out == "q + q^2\n"

    def test_a1_monomial(self, capsys):
        code, out, _ = run_cli(capsys, "kostka", "--type", "a1", "--lambda", "4", "--mu", "0")
        assert code == 0
        assert out == "q^2\n"

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "kostka",
            "--type",
            "a2",
            "--lambda",
            "1,1",
            "--mu",
            "0,0",
            "--format",
            "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["coefficients"] == {"1": 1, "2": 1}

    def test_bad_coordinates_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "kostka", "--type", "a1", "--lambda", "x", "--mu", "0")
        assert code == 2
        assert "error" in err

    def test_semantic_error_exit_two(self, capsys):
        code, _, err = run_cli(capsys, "kostka", "--type", "a1", "--lambda", "-1", "--mu", "1")
        assert code == 2
        assert "dominant" in err


class TestTensorCommand:
    def test_pretty(self, capsys):
        code, out, _ = run_cli(capsys, "tensor", "--type", "a1", "--lambda", "1", "--mu", "1")
        assert code == 0
        assert out == "(0) + (2)\n"

    def test_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "tensor", "--type", "a2", "--lambda", "1,0", "--mu", "0,1", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["summands"] == [
            {"weight": [0, 0], "multiplicity": 1},
            {"weight": [1, 1], "multiplicity": 1},
        ]


class TestStalksCommand:
    def test_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "stalks", "--family", "lorentz", "--n", "5", "--lmax", "6"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "lambda,mu,degree,dim"
        assert "2,0,-16,1" in lines

    def test_missing_n_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "stalks", "--family", "lorentz")
        assert code == 2
        assert "--n" in err

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "stalks",
            "--family",
            "octonionic",
            "--lmax",
            "2",
            "--format",
            "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert all(set(row) == {"family", "lambda", "mu", "stalks"} for row in payload)

    def test_shifted_convention(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "stalks",
            "--family",
            "lorentz",
            "--n",
            "3",
            "--lmax",
            "4",
            "--format",
            "json",
            "--convention",
            "shifted",
        )
        assert code == 0
        payload = json.loads(out)
        diagonal = [row for row in payload if row["lambda"] == row["mu"]]
        assert diagonal
        assert all(row["stalks"] == [{"degree": 0, "dim": 1}] for row in diagonal)


class TestCheckCommands:
    def test_pairing_check(self, capsys):
        code, out, _ = run_cli(
            capsys, "pairing-check", "--family", "lorentz", "--n", "7", "--lmax", "20"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["failures"] == []
        assert payload["checked"] == 21

    def test_hilbert_check_octonionic(self, capsys):
        code, out, _ = run_cli(capsys, "hilbert-check", "--family", "octonionic")
        assert code == 0
        payload = json.loads(out)
        assert payload["checks"]["ext_hilbert"] is True
        assert payload["ext_generator_degrees"] == [4, 8, 8, 8, 8, 8, 8, 8, 8, 12]

    def test_centralizer_check(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "centralizer-check",
            "--family",
            "lorentz",
            "--n",
            "4",
            "--samples",
            "20",
            "--seed",
            "3",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["failures"] == []
        assert payload["equivariance"] is True
        assert payload["equivariance_symbolic"] is True
        assert payload["nu_preserves_char_poly"] is True


class TestVerifyAll:
    def test_lorentz_passes(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify-all",
            "--family",
            "lorentz",
            "--n",
            "5",
            "--lmax",
            "5",
            "--oracle-size",
            "6",
            "--samples",
            "30",
        )
        assert code == 0
        assert "PASS pairing-identity" in out
        assert "PASS oracle-equivalence" in out
        assert "FAIL" not in out

    def test_octonionic_passes(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify-all",
            "--family",
            "octonionic",
            "--lmax",
            "4",
            "--lmax-pairing",
            "12",
            "--oracle-size",
            "6",
            "--samples",
            "30",
        )
        assert code == 0
        assert "FAIL" not in out

    def test_deterministic_bytes(self, capsys):
        args = [
            "verify-all",
            "--family",
            "lorentz",
            "--n",
            "3",
            "--lmax",
            "4",
            "--oracle-size",
            "5",
            "--samples",
            "15",
            "--seed",
            "42",
        ]
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1.encode() == out2.encode()

    def test_threaded_sweep_matches_sequential(self, capsys, monkeypatch):
        args = ["stalks", "--family", "octonionic", "--lmax", "4", "--format", "csv"]
        code1, sequential, _ = run_cli(capsys, *args)
        monkeypatch.setenv("SATAKE_KIT_THREADS", "4")
        code2, threaded, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert sequential == threaded
