import json

import pytest

from kpell import cli
from kpell.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_numeric_text(self, capsys):
        code, out, err = run(capsys, "table", "--kind", "P", "--k", "2", "--n-max", "5")
        assert code == 0 and err == ""
        assert out.splitlines() == ["0\t0", "1\t1", "2\t2", "3\t6", "4\t16", "5\t44"]

    def test_symbolic_pell(self, capsys):
        code, out, _ = run(capsys, "table", "--kind", "P", "--symbolic", "--n-max", "3")
        assert code == 0
        assert out.splitlines() == ["0\t0", "1\t1", "2\t2", "3\tk + 4"]

    def test_symbolic_gen(self, capsys):
        code, out, _ = run(capsys, "table", "--kind", "G", "--symbolic", "--n-max", "4")
        assert code == 0
        assert out.splitlines() == [
            "0\ta",
            "1\ta",
            "2\tka + 2a",
            "3\t3ka + 4a",
            "4\tk^2a + 8ka + 8a",
        ]

    def test_symbolic_excludes_k(self, capsys):
        code, _, err = run(
            capsys, "table", "--kind", "P", "--symbolic", "--k", "1", "--n-max", "3"
        )
        assert code == 2
        assert "excludes --k" in err

    def test_symbolic_wrong_kind(self, capsys):
        code, _, err = run(capsys, "table", "--kind", "Q", "--symbolic", "--n-max", "3")
        assert code == 2
        assert "kinds P and G only" in err

    def test_numeric_needs_k(self, capsys):
        code, _, err = run(capsys, "table", "--kind", "P", "--n-max", "3")
        assert code == 2
        assert "need --k" in err

    def test_a_restricted_to_gen(self, capsys):
        code, _, err = run(capsys, "table", "--kind", "q", "--k", "1", "--a", "2", "--n-max", "2")
        assert code == 2
        assert "--a applies to kind G only" in err

    def test_negative_n_max(self, capsys):
        code, _, err = run(capsys, "table", "--kind", "P", "--k", "1", "--n-max", "-1")
        assert code == 2

    def test_json_payload(self, capsys):
        code, out, _ = run(
            capsys,
            "table", "--kind", "G", "--k", "3", "--a", "2", "--n-max", "2",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "kind": "G",
            "symbolic": False,
            "k": 3,
            "a": 2,
            "rows": [
                {"n": 0, "value": "2"},
                {"n": 1, "value": "2"},
                {"n": 2, "value": "10"},
            ],
        }


class TestEval:
    def test_default_recurrence(self, capsys):
        code, out, _ = run(capsys, "eval", "--kind", "Q", "--k", "2", "--n", "4")
        assert code == 0
        assert out == "56\n"

    @pytest.mark.parametrize("method", ["binet", "binomial", "fast"])
    def test_pell_routes_agree(self, capsys, method):
        code, out, _ = run(
            capsys, "eval", "--kind", "P", "--k", "3", "--n", "9", "--method", method
        )
        assert code == 0
        assert out == "4921\n"

    def test_gen_double_sum_route(self, capsys):
        code, out, _ = run(
            capsys,
            "eval", "--kind", "G", "--k", "1", "--a", "1", "--n", "5",
            "--method", "double-sum",
        )
        assert code == 0
        assert out == "41\n"

    def test_method_kind_mismatch(self, capsys):
        code, _, err = run(
            capsys, "eval", "--kind", "G", "--k", "1", "--n", "4", "--method", "fast"
        )
        assert code == 2
        assert "kind P only" in err

    def test_binomial_index_floor(self, capsys):
        code, _, err = run(
            capsys, "eval", "--kind", "P", "--k", "1", "--n", "2", "--method", "binomial"
        )
        assert code == 2
        assert "n >= 3" in err

    def test_cross_check_catches_bad_route(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "pell_binet", lambda k, n: 999)
        code, _, err = run(
            capsys, "eval", "--kind", "P", "--k", "1", "--n", "6", "--method", "binet"
        )
        assert code == 1
        assert "internal cross-check failed" in err

    def test_json_payload(self, capsys):
        code, out, _ = run(
            capsys,
            "eval", "--kind", "G", "--k", "2", "--a", "3", "--n", "3", "--format", "json",
        )
        assert code == 0
        assert json.loads(out) == {"kind": "G", "k": 2, "a": 3, "n": 3, "value": "30"}

    def test_huge_term_prints_in_full(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--kind", "P", "--k", "1", "--n", "100000", "--method", "fast"
        )
        assert code == 0
        digits = out.strip()
        assert len(digits) == 38278 and digits.isdigit()

    def test_guard_trips_recurrence(self, capsys, monkeypatch):
        monkeypatch.setenv("KPELL_GUARD_N", "50")
        code, _, err = run(capsys, "eval", "--kind", "P", "--k", "1", "--n", "100")
        assert code == 2
        assert "KPELL_GUARD_N" in err


class TestVerify:
    def test_all_pass_small_grid(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--k-max", "2", "--a-max", "2", "--n-max", "8"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["identity", "pass", "fail"]
        total = next(line for line in lines if line.startswith("total"))
        assert total.split() == ["total", "794", "0"]
        assert not any(line.startswith("FAIL") for line in lines)

    def test_single_identity_selection(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--identities", "cassini", "--k-max", "1", "--a-max", "1",
            "--n-max", "10",
        )
        assert code == 0
        assert "cassini" in out and "catalan" not in out

    def test_eigen_verbatim_fails(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--identities", "eigen-verbatim", "--k-max", "1", "--a-max", "1",
            "--n-max", "2",
        )
        assert code == 1
        fail_lines = [line for line in out.splitlines() if line.startswith("FAIL")]
        assert len(fail_lines) == 1
        assert "eigen-verbatim" in fail_lines[0]
        assert "k=1" in fail_lines[0] and "n=2" in fail_lines[0]
        assert "0.750000" in fail_lines[0]

    def test_unknown_identity(self, capsys):
        code, _, err = run(capsys, "verify", "--identities", "nope")
        assert code == 2
        assert "unknown identity" in err

    def test_empty_identities(self, capsys):
        code, _, err = run(capsys, "verify", "--identities", ",")
        assert code == 2

    def test_json_report(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--identities", "convolution1,squares1", "--k-max", "1",
            "--a-max", "1", "--n-max", "4", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"]["fail"] == 0
        assert payload["summary"]["pass"] == len(payload["results"])
        assert {row["identity_name"] for row in payload["results"]} == {
            "convolution1",
            "squares1",
        }

    def test_json_output_is_deterministic(self, capsys):
        args = ("verify", "--k-max", "1", "--a-max", "1", "--n-max", "5", "--format", "json")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second


class TestMatrix:
    def test_matrix_text(self, capsys):
        code, out, _ = run(
            capsys, "matrix", "--kind", "G", "--k", "1", "--a", "1", "--n", "2"
        )
        assert code == 0
        assert out == " 3  1\n-1  2\n"

    def test_inverse_text(self, capsys):
        code, out, _ = run(
            capsys, "matrix", "--kind", "P", "--k", "1", "--n", "2", "--show", "inverse"
        )
        assert code == 0
        assert out == "2/5  -1/5\n1/5   2/5\n"

    def test_cofactor_json(self, capsys):
        code, out, _ = run(
            capsys,
            "matrix", "--kind", "P", "--k", "1", "--n", "2", "--show", "cofactor",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out) == {"n": 2, "entries": [["2", "1"], ["-1", "2"]]}

    def test_cofactor_kind_restriction(self, capsys):
        code, _, err = run(
            capsys, "matrix", "--kind", "Q", "--k", "1", "--n", "3", "--show", "cofactor"
        )
        assert code == 2
        assert "kinds P and G only" in err

    def test_cofactor_needs_order_two(self, capsys):
        code, _, err = run(
            capsys, "matrix", "--kind", "P", "--k", "1", "--n", "1", "--show", "cofactor"
        )
        assert code == 2

    def test_theta_phi_text(self, capsys):
        code, out, _ = run(
            capsys, "matrix", "--kind", "P", "--k", "3", "--n", "3", "--show", "theta-phi"
        )
        assert code == 0
        assert out.splitlines() == ["theta: 1 2 7 20", "phi:   20 7 2 1"]

    def test_theta_phi_json(self, capsys):
        code, out, _ = run(
            capsys,
            "matrix", "--kind", "P", "--k", "3", "--n", "3", "--show", "theta-phi",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out) == {
            "n": 3,
            "theta": ["1", "2", "7", "20"],
            "phi": ["20", "7", "2", "1"],
        }

    def test_n_must_be_positive(self, capsys):
        code, _, err = run(capsys, "matrix", "--kind", "P", "--k", "1", "--n", "0")
        assert code == 2


class TestEigen:
    def test_corrected_matches(self, capsys):
        code, out, _ = run(capsys, "eigen", "--k", "1", "--n", "2")
        assert code == 0
        lines = out.splitlines()
        assert lines[1] == "rounded: 5"
        assert lines[2] == "exact:   5"
        assert lines[4] == "formula: corrected"

    def test_verbatim_mismatch(self, capsys):
        code, out, _ = run(capsys, "eigen", "--k", "1", "--n", "2", "--paper-verbatim")
        assert code == 1
        lines = out.splitlines()
        assert lines[0].startswith("product: 4.250000")
        assert lines[1] == "rounded: 4"
        assert lines[2] == "exact:   5"
        assert lines[3] == "abs residual: 0.750000"
        assert lines[4] == "formula: verbatim"

    def test_bad_domain(self, capsys):
        code, _, _ = run(capsys, "eigen", "--k", "0", "--n", "2")
        assert code == 2


class TestBench:
    def test_line_format_and_repeat_determinism(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--k", "1", "--n", "500", "--repeat", "2"
        )
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2
        digests = set()
        for run_idx, line in enumerate(lines):
            fields = dict(part.split("=", 1) for part in line.split())
            assert fields["method"] == "fast"
            assert fields["k"] == "1" and fields["n"] == "500"
            assert fields["run"] == str(run_idx)
            float(fields["time_s"])  # parses
            digests.add(fields["digest"])
        assert len(digests) == 1

    def test_methods_share_digest(self, capsys):
        _, fast_out, _ = run(capsys, "bench", "--k", "2", "--n", "300", "--method", "fast")
        _, rec_out, _ = run(capsys, "bench", "--k", "2", "--n", "300", "--method", "recurrence")
        digest = lambda s: s.split("digest=")[1].strip()
        assert digest(fast_out) == digest(rec_out)

    def test_guard_blocks_recurrence(self, capsys, monkeypatch):
        monkeypatch.setenv("KPELL_GUARD_N", "50")
        code, _, err = run(
            capsys, "bench", "--k", "1", "--n", "100", "--method", "recurrence"
        )
        assert code == 2
        assert "KPELL_GUARD_N" in err

    def test_fast_ignores_guard(self, capsys, monkeypatch):
        monkeypatch.setenv("KPELL_GUARD_N", "50")
        code, _, _ = run(capsys, "bench", "--k", "1", "--n", "100", "--method", "fast")
        assert code == 0


class TestParser:
    def test_no_subcommand_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_bad_choice_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--kind", "X", "--n-max", "3"])
        assert exc.value.code == 2
