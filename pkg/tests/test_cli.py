"""CLI contract: exit codes, JSON schema, round-tripping."""

import json

import pytest

from maxcurves import cli


def run_capture(argv, capsys):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_verify_gsx49_passes(self, capsys):
        code, out, _ = run_capture(["verify", "gsx49"], capsys)
        assert code == 0
        assert "result: PASS" in out

    def test_injected_delta_fails(self, capsys):
        code, out, _ = run_capture(
            ["verify", "gsx49", "--inject-census-delta", "1"], capsys)
        assert code == 1
        assert "result: FAIL" in out

    def test_malformed_flags(self, capsys):
        assert run_capture(["verify", "gsx49", "--bogus"], capsys)[0] == 2
        assert run_capture(["verify"], capsys)[0] == 2
        assert run_capture(["nope"], capsys)[0] == 2
        assert run_capture([], capsys)[0] == 2

    def test_parameter_errors(self, capsys):
        code, _, err = run_capture(["verify", "fk", "--q", "7"], capsys)
        assert code == 2 and "error" in err
        code, _, err = run_capture(["semigroup", "--gens", "4,6"], capsys)
        assert code == 2
        code, _, err = run_capture(["semigroup", "--gens", "a,b"], capsys)
        assert code == 2

    def test_help_exits_zero(self, capsys):
        assert run_capture(["--help"], capsys)[0] == 0


class TestVerifyOutput:
    def test_json_schema_fields(self, capsys):
        code, out, _ = run_capture(["verify", "gsx49", "--format", "json"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["schema_version"] == 1
        assert "tool_version" in doc
        rep = doc["report"]
        assert rep["census"]["total"] == 148
        assert rep["order_sequences"]["Pinf"] == [0, 1, 3, 8]
        assert rep["epsilon_sequence"] == [0, 1, 2, 7]
        assert rep["passing"] is True
        assert all("name" in c and "passed" in c for c in rep["checks"])

    def test_json_roundtrip(self, capsys):
        _, out, _ = run_capture(["verify", "fk", "--q", "5", "--format", "json"], capsys)
        doc = json.loads(out)
        assert json.loads(json.dumps(doc)) == doc

    def test_gk_json(self, capsys):
        code, out, _ = run_capture(
            ["verify", "gk", "--qbar", "2", "--format", "json"], capsys)
        assert code == 0
        rep = json.loads(out)["report"]
        assert rep["census"]["total"] == 225
        assert rep["epsilon_sequence"] == [0, 1, 2, 8]

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run_capture(
            ["verify", "gsx49", "--format", "json", "--out", str(path)], capsys)
        assert code == 0 and out == ""
        assert json.loads(path.read_text())["report"]["passing"] is True


class TestQueryCommands:
    def test_semigroup_large_gaps_elided(self, capsys):
        code, out, _ = run_capture(["semigroup", "--gens", "21,27,28"], capsys)
        assert code == 0
        assert "genus (gap count): 99" in out
        assert "elided" in out
        assert "conductor: 198" in out

    def test_semigroup_small(self, capsys):
        code, out, _ = run_capture(
            ["semigroup", "--gens", "5,7,8", "--upto", "8"], capsys)
        assert code == 0
        assert "[0, 5, 7, 8]" in out

    def test_orders(self, capsys):
        code, out, _ = run_capture(["orders", "--gens", "5,7,8", "--q", "7"], capsys)
        assert code == 0
        assert "(0, 1, 3, 8)" in out

    def test_bound_prints_exact_rational(self, capsys):
        code, out, _ = run_capture(["bound", "--q", "11", "--r", "4"], capsys)
        assert code == 0
        assert "360/24 = 15" in out

    def test_bound_json(self, capsys):
        _, out, _ = run_capture(
            ["bound", "--q", "5", "--r", "3", "--format", "json"], capsys)
        doc = json.loads(out)
        assert doc["bound"] == {"numerator": 4, "denominator": 1}

    def test_deduce_dim(self, capsys):
        code, out, _ = run_capture(["deduce-dim", "--q", "11", "--g", "19"], capsys)
        assert code == 0
        assert "[3]" in out and "inconclusive" not in out
        _, out, _ = run_capture(["deduce-dim", "--q", "27", "--g", "99"], capsys)
        assert "inconclusive" in out
