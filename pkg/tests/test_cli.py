import json
import subprocess
import sys

import pytest

from bellseq import cli
from bellseq.ring import format_element, parse_element
from bellseq.seq import bell_transform, preset


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def run_subprocess(*argv):
    return subprocess.run(
        [sys.executable, "-m", "bellseq", *argv], capture_output=True, text=True
    )


class TestSeqCommand:
    def test_catalan_plain(self, capsys):
        code, out = run_cli(capsys, "seq", "--preset", "catalan", "--n", "3")
        assert code == 0
        assert out.splitlines() == ["1", "2", "5", "14"]

    def test_explicit_spec_n0(self, capsys):
        code, out = run_cli(capsys, "seq", "--a", "0", "--b", "1", "--c", "1,1", "--n", "0")
        assert code == 0
        assert out.splitlines() == ["1"]

    def test_jacobsthal_with_offset(self, capsys):
        code, out = run_cli(
            capsys, "seq", "--preset", "jacobsthal", "--n", "4", "--apply-offset"
        )
        assert code == 0
        assert out.splitlines() == ["0", "1", "1", "1+2x", "1+4x"]

    def test_fuss_catalan_param(self, capsys):
        code, out = run_cli(
            capsys, "seq", "--preset", "fuss_catalan", "--param", "b=2", "--n", "4"
        )
        assert code == 0
        assert out.splitlines() == ["1", "1", "2", "5", "14"]

    def test_csv_format(self, capsys):
        code, out = run_cli(capsys, "seq", "--preset", "motzkin", "--n", "2", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["kind,n,value", "sequence,0,1", "sequence,1,1", "sequence,2,2"]

    def test_quiet(self, capsys):
        code, out = run_cli(capsys, "seq", "--preset", "motzkin", "--n", "3", "--quiet")
        assert code == 0
        assert out == ""


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ("seq", "--a", "0", "--b", "0", "--c", "1,1", "--n", "3"),
            ("seq", "--a", "1", "--c", "1,1", "--n", "3"),
            ("seq", "--a", "1", "--b", "0", "--c", "1,,oops", "--n", "3"),
            ("seq", "--preset", "nothere", "--n", "3"),
            ("seq", "--preset", "fuss_catalan", "--n", "3"),
            ("seq", "--preset", "fuss_catalan", "--param", "b=0", "--n", "3"),
            ("seq", "--preset", "catalan", "--a", "1", "--n", "3"),
            ("conv", "--preset", "catalan", "--r", "2", "--delta", "1", "--n", "4"),
            ("conv", "--preset", "catalan", "--r", "0", "--n", "4"),
            ("decompose", "--coeffs", "1,1", "--init", "0,1,2", "--n", "8"),
            ("bell", "--n", "4", "--k", "2", "--x", "1,1"),
            ("bell", "--n", "4", "--k", "2"),
            ("bell", "--n", "4", "--k", "2", "--symbolic", "--x", "1,1,1"),
        ],
    )
    def test_exit_code_2(self, argv):
        result = run_subprocess(*argv)
        assert result.returncode == 2, result.stderr


class TestConvCommand:
    def test_catalan_check(self, capsys):
        code, out = run_cli(capsys, "conv", "--preset", "catalan", "--r", "2", "--n", "6", "--check")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 6
        assert all(line.endswith("ok") for line in lines)

    def test_fibonacci_shifted(self, capsys):
        code, out = run_cli(
            capsys, "conv", "--preset", "fibonacci", "--r", "2", "--delta", "1", "--n", "4",
            "--format", "json",
        )
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert all(rec["matched"] for rec in records)
        assert records[-1] == {
            "kind": "verification", "r": 2, "n": 4, "lhs": "5", "rhs": "5", "matched": True,
        }

    def test_r1_reports_equal_sequence(self, capsys):
        code, out = run_cli(
            capsys, "conv", "--a", "1", "--b", "0", "--c", "1,1", "--r", "1", "--n", "5",
            "--format", "json",
        )
        assert code == 0
        spec, _ = preset("motzkin")
        window = bell_transform(spec, 5)
        for rec in map(json.loads, out.splitlines()):
            assert parse_element(rec["lhs"]) == window.value_at(rec["n"])

    def test_closed_only(self, capsys):
        code, out = run_cli(
            capsys, "conv", "--preset", "catalan", "--r", "2", "--n", "3", "--closed-only",
            "--format", "json",
        )
        assert code == 0
        values = [json.loads(line)["value"] for line in out.splitlines()]
        assert values == ["4", "14", "48"]

    def test_mismatch_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr("bellseq.conv.convolution_closed", lambda spec, r, n: 424242)
        code, out = run_cli(capsys, "conv", "--preset", "catalan", "--r", "2", "--n", "3")
        assert code == 1
        assert "MISMATCH" in out


class TestDecomposeCommand:
    def test_fibonacci(self, capsys):
        code, out = run_cli(capsys, "decompose", "--coeffs", "1,1", "--init", "0,1", "--n", "8")
        assert code == 0
        assert out.splitlines() == [
            "lambdas: 0,1",
            "sequence: 0,1,1,2,3,5,8,13,21",
            "recurrence: ok",
        ]

    def test_lucas(self, capsys):
        code, out = run_cli(capsys, "decompose", "--coeffs", "1,1", "--init", "2,1", "--n", "5")
        assert code == 0
        assert out.splitlines()[0] == "lambdas: 2,-1"

    def test_geometric_order_one(self, capsys):
        code, out = run_cli(capsys, "decompose", "--coeffs", "3", "--init", "1", "--n", "3")
        assert code == 0
        assert out.splitlines() == ["lambdas: 1", "sequence: 1,3,9,27", "recurrence: ok"]

    def test_polynomial_recurrence_json(self, capsys):
        code, out = run_cli(
            capsys, "decompose", "--coeffs", "1,2x", "--init", "0,1", "--n", "4",
            "--format", "json",
        )
        assert code == 0
        rec = json.loads(out)
        assert rec["kind"] == "decomposition"
        assert rec["lambdas"] == ["0", "1"]
        assert rec["values"] == ["0", "1", "1", "1+2x", "1+4x"]
        assert rec["recurrence_ok"] is True


class TestBellCommand:
    def test_symbolic(self, capsys):
        code, out = run_cli(capsys, "bell", "--n", "4", "--k", "2", "--symbolic")
        assert code == 0
        assert out.strip() == "4*x1*x3 + 3*x2^2"

    def test_symbolic_monomial(self, capsys):
        code, out = run_cli(capsys, "bell", "--n", "5", "--k", "5", "--symbolic")
        assert code == 0
        assert out.strip() == "x1^5"

    def test_k_above_n_prints_zero(self, capsys):
        code, out = run_cli(capsys, "bell", "--n", "4", "--k", "6", "--symbolic")
        assert code == 0
        assert out.strip() == "0"

    def test_eval_with_cross_check(self, capsys):
        code, out = run_cli(
            capsys, "bell", "--n", "4", "--k", "2", "--x", "1,1,1", "--cross-check"
        )
        assert code == 0
        assert out.strip() == "7 (cross-check: ok)"

    def test_polynomial_arguments_json(self, capsys):
        code, out = run_cli(
            capsys, "bell", "--n", "3", "--k", "2", "--x", "1,4x", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == {"kind": "bellpoly", "n": 3, "k": 2, "value": "12x"}

    def test_cross_check_mismatch_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr("bellseq.cli.bell_eval_recurrence", lambda n, k, xs: -1)
        code, out = run_cli(
            capsys, "bell", "--n", "4", "--k", "2", "--x", "1,1,1", "--cross-check"
        )
        assert code == 1
        assert "mismatch" in out


class TestJsonRoundTripAndDeterminism:
    def test_preset_matrix_round_trip(self):
        cases = [("fibonacci", None), ("tribonacci", None), ("jacobsthal", None),
                 ("catalan", None), ("motzkin", None), ("fuss_catalan", 2), ("fuss_catalan", 3)]
        for name, b in cases:
            argv = ["seq", "--preset", name, "--n", "10", "--format", "json"]
            if b is not None:
                argv += ["--param", f"b={b}"]
            result = run_subprocess(*argv)
            assert result.returncode == 0
            spec, _ = preset(name, b=b)
            window = bell_transform(spec, 10)
            for rec in map(json.loads, result.stdout.splitlines()):
                value = parse_element(rec["value"])
                assert value == window.value_at(rec["n"])
                assert format_element(value) == rec["value"]

    def test_byte_identical_reruns(self):
        argv = ("conv", "--preset", "jacobsthal", "--r", "2", "--n", "6", "--format", "json")
        first = run_subprocess(*argv)
        second = run_subprocess(*argv)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout
        assert first.stdout.encode() == second.stdout.encode()
