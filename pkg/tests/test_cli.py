"""Command-line contract: specs, formats, exit codes, determinism."""

import json

import pytest

import known_values as kv
from riordan.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTriangleCommand:
    def test_fib_csv(self, capsys):
        code, out, err = run_cli(capsys, "triangle", "fib", "--rows", "6", "--format", "csv")
        assert code == 0 and err == ""
        assert out.splitlines()[-1] == "0,3,0,4,0,1"

    def test_named_triangles_match_printed(self, capsys):
        cases = {
            "fib": kv.FIB_TRIANGLE,
            "dual-fib": kv.DUAL_FIB_TRIANGLE,
            "tilde": kv.TILDE_TRIANGLE,
            "tildetilde": kv.TILDETILDE_TRIANGLE,
            "a011973": kv.A011973_TRIANGLE,
            "a111959": kv.A111959_TRIANGLE,
            "i0-dual": kv.I0_DUAL_TRIANGLE,
            "cf-coeff": kv.CF_COEFF_TRIANGLE,
            "cf@1": kv.CF_MATRIX_B1,
            "cf@2": kv.CF_MATRIX_B2,
        }
        for name, rows in cases.items():
            code, out, _ = run_cli(
                capsys, "triangle", name, "--rows", "6", "--format", "json"
            )
            assert code == 0, name
            assert json.loads(out) == [[str(e) for e in row] for row in rows], name

    def test_invert_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "triangle", "cf@1", "--rows", "6", "--invert", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == [[str(e) for e in r] for r in kv.CF_MATRIX_B1_INVERSION]
        code, out, _ = run_cli(
            capsys, "triangle", "cf-coeff", "--rows", "6", "--invert", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == [[str(e) for e in r] for r in kv.CF_COEFF_INVERSION]

    def test_gf_triangle(self, capsys):
        code, out, _ = run_cli(
            capsys, "triangle", "--gf", "1/(1-y*x-x^2)", "--rows", "6", "--format", "csv"
        )
        assert code == 0
        assert out.strip().splitlines() == [
            ",".join(str(e) for e in row) for row in kv.FIB_TRIANGLE
        ]

    def test_gf_constant(self, capsys):
        code, out, _ = run_cli(capsys, "triangle", "--gf", "1", "--rows", "1")
        assert code == 0 and out.strip() == "1"

    def test_eval_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "triangle", "cf-coeff", "--rows", "9", "--invert", "--eval-at", "1"
        )
        assert code == 0
        assert out.strip() == "1 -1 -2 0 -2 0 -4 0 -10"

    def test_unknown_name(self, capsys):
        code, _, err = run_cli(capsys, "triangle", "nope", "--rows", "3")
        assert code == 1 and "unknown triangle" in err

    def test_name_and_gf_conflict(self, capsys):
        code, _, err = run_cli(capsys, "triangle", "fib", "--gf", "1", "--rows", "3")
        assert code == 1 and "exactly one" in err

    def test_gf_parse_error(self, capsys):
        code, _, err = run_cli(capsys, "triangle", "--gf", "1/(1-", "--rows", "3")
        assert code == 1 and "offset" in err

    def test_inversion_precondition_failure(self, capsys):
        code, _, err = run_cli(
            capsys, "triangle", "--gf", "2/(1-x)", "--rows", "3", "--invert"
        )
        assert code == 1 and "not invertible" in err

    def test_bfile_rejected_for_triangles(self, capsys):
        code, _, err = run_cli(
            capsys, "triangle", "fib", "--rows", "3", "--format", "bfile"
        )
        assert code == 1 and "single sequences" in err


class TestSequenceCommand:
    def test_dual_cf_at_1(self, capsys):
        code, out, _ = run_cli(capsys, "sequence", "dual-cf@1", "-n", "10")
        assert code == 0
        assert out.strip() == "1 -1 -2 0 -2 0 -4 0 -10 0"

    def test_hankel_of_dual_cf(self, capsys):
        code, out, _ = run_cli(capsys, "sequence", "hankel:dual-cf@1", "-n", "6")
        assert code == 0
        assert out.strip() == "1 -3 14 -32 96 -208"

    def test_hankel_at_minus_1(self, capsys):
        code, out, _ = run_cli(capsys, "sequence", "hankel:dual-cf@-1", "-n", "6")
        assert code == 0
        assert out.strip() == "1 1 -10 -16 64 112"

    def test_rowsums(self, capsys):
        code, out, _ = run_cli(capsys, "sequence", "rowsums:cf@1", "-n", "6")
        assert code == 0
        assert out.strip() == "1 1 4 15 70 336"

    def test_gf_sequence_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "sequence", "gf:rev(x-x^2)", "-n", "6", "--format", "csv"
        )
        assert code == 0
        assert out.strip() == "0,1,1,2,5,14"

    def test_bfile_format_and_offset(self, capsys):
        code, out, _ = run_cli(
            capsys, "sequence", "gf:1/(1-2*x)", "-n", "4", "--format", "bfile",
            "--offset", "1",
        )
        assert code == 0
        assert out.splitlines() == ["1 1", "2 2", "3 4", "4 8"]

    def test_json_strings(self, capsys):
        code, out, _ = run_cli(
            capsys, "sequence", "gf:1/(2-2*x)", "-n", "3", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == ["1/2", "1/2", "1/2"]

    def test_polynomial_valued_gf(self, capsys):
        code, out, _ = run_cli(capsys, "sequence", "gf:1/(1-y*x-x^2)", "-n", "4")
        assert code == 0
        assert out.strip() == "1 y y^2+1 y^3+2*y"

    def test_unknown_spec(self, capsys):
        code, _, err = run_cli(capsys, "sequence", "fib@1", "-n", "3")
        assert code == 1 and "unknown sequence" in err

    def test_order_flag_gives_headroom(self, capsys):
        code, out, _ = run_cli(
            capsys, "sequence", "gf:1/(1-x)", "-n", "40", "--order", "8"
        )
        assert code == 0
        assert out.strip() == " ".join(["1"] * 40)


class TestVerifyCommand:
    def test_involution_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "involution")
        assert code == 0
        assert "PASS" in out and "FAIL" not in out
        assert out.strip().endswith("0 failed")

    def test_all_flags_discrepancies(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "all")
        assert code == 0
        assert out.count("DISCREPANCY") == 2
        assert "parity gate" in out  # row-formula gate note
        assert "2F1" in out  # hypergeometric sign note

    def test_unknown_suite_rejected(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "nope"])
        capsys.readouterr()

    def test_failing_check_sets_exit_code(self, capsys, monkeypatch):
        from riordan import verify
        from riordan.verify import Check, SuiteReport

        broken = SuiteReport("fake", [Check("always wrong", False, "counterexample at n=0")])
        monkeypatch.setattr(verify, "run", lambda suite: [broken])
        code, out, _ = run_cli(capsys, "verify", "involution")
        assert code == 1
        assert "FAIL always wrong" in out
        assert out.strip().endswith("1 failed")


class TestDeterminism:
    def test_identical_bytes_across_runs(self, capsys):
        a = run_cli(capsys, "triangle", "cf@1", "--rows", "8", "--format", "json")
        b = run_cli(capsys, "triangle", "cf@1", "--rows", "8", "--format", "json")
        assert a == b
        a = run_cli(capsys, "verify", "hankel")
        b = run_cli(capsys, "verify", "hankel")
        assert a == b
