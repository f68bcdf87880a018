from __future__ import annotations

import json

import pytest

from addbasis.cli import main


def run(capsys, args):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_basis_passes(self, capsys):
        code, out, _ = run(capsys, ["analyze", "6N U {2,3}"])
        assert code == 0
        assert out.startswith("set: 6N+0@0 U {2,3}\n")
        assert "order: 4" in out
        assert "verdict: yes" in out

    def test_non_basis_fails_with_cycle(self, capsys):
        code, out, _ = run(capsys, ["--format", "json", "analyze", "2N"])
        assert code == 1
        tree = json.loads(out)
        assert tree["verdict"] is False
        assert tree["basis"] is False
        assert tree["cycle"] == {"first_seen": 1, "repeats_at": 2}

    def test_parse_error_is_usage(self, capsys):
        code, out, err = run(capsys, ["analyze", "0N"])
        assert code == 2
        assert out == ""
        assert "modulus must be positive" in err

    def test_json_report_shape(self, capsys):
        code, out, _ = run(capsys, ["--format", "json", "analyze",
                                    "6N U {2,3}"])
        assert code == 0
        tree = json.loads(out)
        assert tree["order"]["order"] == 4
        assert tree["order"]["coverage_from"] == 7
        assert tree["essentials"]["elements"] == [2, 3]
        assert tree["essential_subsets"] == [[2], [3]]
        assert tree["trace"]["delta"] == 1
        assert [a["name"] for a in tree["audits"]] == [
            "order-sandwich", "elementary-order-bounds", "prime-sum-floor",
            "reservoir-bound", "decomposition-equivalences",
            "divisor-coprimality"]
        assert all(a["holds"] for a in tree["audits"])

    def test_hmax_flag(self, capsys):
        code, out, _ = run(capsys, ["--format", "json", "analyze",
                                    "6N U {2,3}", "--hmax", "5"])
        assert code == 0
        assert json.loads(out)["order"]["effective_bound_level"] == 5

    def test_reruns_are_bit_identical(self, capsys):
        _, first, _ = run(capsys, ["--format", "json", "analyze",
                                   "12N U {1,3,6,9}"])
        _, second, _ = run(capsys, ["--format", "json", "analyze",
                                    "12N U {1,3,6,9}"])
        assert first == second


class TestFamily:
    def test_an(self, capsys):
        code, out, _ = run(capsys, ["--format", "json", "family", "An", "3"])
        assert code == 0
        assert json.loads(out)["order"]["order"] == 8

    def test_xn(self, capsys):
        code, out, _ = run(capsys, ["--format", "json", "family", "Xn", "2"])
        assert code == 0
        tree = json.loads(out)
        assert tree["order"]["order"] == 2
        assert tree["essential_subsets"] == [[1, 3, 5], [1, 2, 4, 5]]

    def test_prescribed(self, capsys):
        code, out, _ = run(capsys, ["--format", "json", "family",
                                    "prescribed", "1,1"])
        assert code == 0
        tree = json.loads(out)
        assert tree["trace"]["delta"] == 2
        assert tree["trace"]["counts"] == [1, 1, 0]

    def test_modulus_cap_is_usage_error(self, capsys):
        code, _, err = run(capsys, ["family", "An", "10",
                                    "--modulus-cap", "1000"])
        assert code == 2
        assert "cap" in err

    def test_bad_params_rejected(self, capsys):
        code, _, err = run(capsys, ["family", "prescribed", "1,x"])
        assert code == 2


class TestSweep:
    def test_entire_verified_range_summary(self, capsys):
        code, out, _ = run(capsys, ["--format", "json", "sweep", "100"])
        assert code == 0
        tree = json.loads(out)
        assert tree["verdict"] is True
        assert tree["equalities"] == [30]
        assert tree["argmax_n"] == 30
        assert tree["violations"] == []

    def test_rows_in_text_mode(self, capsys):
        code, out, _ = run(capsys, ["sweep", "40", "--rows"])
        assert code == 0
        assert "30\t1564\t2.05728412848" in out


class TestVerifyMR:
    def test_clean_range(self, capsys):
        code, out, _ = run(capsys, ["verify-mr", "2", "50"])
        assert code == 0
        assert "holds: yes" in out

    def test_violating_range(self, capsys):
        code, out, _ = run(capsys, ["--format", "json", "verify-mr",
                                    "4690", "4700"])
        assert code == 1
        tree = json.loads(out)
        assert tree["verdict"] is False
        assert tree["first_inequality"]["holds"] is False
        assert tree["first_inequality"]["violation_windows"] == [[4692, 4700]]
        assert tree["second_inequality"]["holds"] is True

    def test_reversed_range_is_usage(self, capsys):
        code, _, err = run(capsys, ["verify-mr", "50", "2"])
        assert code == 2


class TestOracleCheck:
    def test_small_run(self, capsys):
        code, out, _ = run(capsys, ["--format", "json", "oracle-check",
                                    "--seed", "3", "--iters", "10"])
        assert code == 0
        tree = json.loads(out)
        assert tree["instances"] == 10
        assert tree["order_disagreements"] == []


class TestUsage:
    @pytest.mark.parametrize("argv", [[], ["bogus"], ["analyze"]])
    def test_usage_errors(self, capsys, argv):
        assert main(argv) == 2
        capsys.readouterr()

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        out = capsys.readouterr().out
        assert "analyze" in out and "verify-mr" in out
