"""Tests for the command-line surface: outputs, determinism, exit codes."""

import json

import pytest

from monodromy.cli import main


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    lines = [json.loads(line) for line in out.strip().splitlines() if line]
    return code, lines


class TestVp:
    def test_value(self, capsys):
        code, lines = run(capsys, ["vp", "2", "1/7"])
        assert code == 0
        assert lines[-1]["result"]["v"] == "1/3"

    def test_zero(self, capsys):
        code, lines = run(capsys, ["vp", "2", "0/1"])
        assert code == 0 and lines[-1]["result"]["v"] == "0"

    def test_p7(self, capsys):
        code, lines = run(capsys, ["vp", "7", "1/3"])
        assert code == 0 and lines[-1]["result"]["v"] == "1/3"

    def test_bad_denominator_exits_2(self, capsys):
        assert main(["vp", "2", "1/6"]) == 2


class TestW:
    def test_violation(self, capsys):
        code, lines = run(capsys, ["w", "2", "5", "3", "1/7", "1/7"])
        assert code == 0
        res = lines[-1]["result"]
        assert res["w"] == "4/3" and res["verdict"] == "violation"

    def test_sporadic_row(self, capsys):
        code, lines = run(capsys, ["w", "5", "1", "6", "7/24", "1/24"])
        assert lines[-1]["result"]["w"] == "11/8"

    def test_pass(self, capsys):
        code, lines = run(capsys, ["w", "2", "1", "1", "1/3", "1/3"])
        res = lines[-1]["result"]
        assert res["verdict"] == "pass" and res["w"] == "2"

    def test_malformed_fraction_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["w", "2", "5", "3", "x/y", "1/7"])
        assert exc.value.code == 2


class TestSearches:
    def test_belyi_violation(self, capsys):
        code, lines = run(capsys, ["belyi", "--p", "7", "--d", "2", "--e", "2", "--max-r", "2"])
        assert code == 0
        assert lines[-1]["result"]["witness"]["w"] == "4/3"

    def test_belyi_pass(self, capsys):
        code, lines = run(capsys, ["belyi", "--p", "2", "--d", "3", "--e", "3", "--max-r", "8"])
        assert code == 0
        assert lines[-1]["result"]["verdict"] == "no_violation_up_to_max_r"

    def test_binomial_pass(self, capsys):
        code, lines = run(
            capsys, ["binomial", "--p", "2", "--d", "13", "--e", "3", "--max-r", "8"]
        )
        assert lines[-1]["result"]["verdict"] == "no_violation_up_to_max_r"

    def test_belyi_rejects_double_multiple(self, capsys):
        assert main(["belyi", "--p", "2", "--d", "2", "--e", "4", "--max-r", "3"]) == 2

    def test_env_grid_override(self, capsys, monkeypatch):
        monkeypatch.setenv("MONODROMY_MAX_GRID", "100")
        code, lines = run(capsys, ["belyi", "--p", "2", "--d", "3", "--e", "3"])
        assert lines[-1]["inputs"]["max_r"] == 3


class TestVerifyWitnesses:
    def test_builtin_all_pass(self, capsys):
        code, lines = run(capsys, ["verify-witnesses"])
        assert code == 0
        summary = lines[-1]["result"]
        assert summary["failures"] == 0 and summary["rows"] >= 30
        assert all(row["ok"] for row in lines[:-1])

    def test_tampered_table_exits_1(self, capsys, tmp_path):
        table = tmp_path / "t.json"
        table.write_text(json.dumps([[2, 5, 3, "1/7", "1/7", "4/3"],
                                     [2, 5, 3, "1/7", "1/7", "3/2"]]))
        code, lines = run(capsys, ["verify-witnesses", "--table", str(table)])
        assert code == 1
        assert lines[-1]["result"]["failures"] == 1


class TestCatalog:
    def test_final_p5(self, capsys):
        code, lines = run(capsys, ["catalog", "--p", "5", "--max", "10", "--theorem", "final"])
        assert code == 0
        pairs = {(r["item"], r["A"], r["B"]) for r in lines[:-1]}
        assert (14, 2, 1) in pairs

    def test_candidates_p2(self, capsys):
        code, lines = run(
            capsys, ["catalog", "--p", "2", "--max", "20", "--theorem", "candidates"]
        )
        pairs = {(r["item"], r["A"], r["B"]) for r in lines[:-1]}
        assert (4, 3, 10) in pairs

    def test_final_p7_minimal(self, capsys):
        code, lines = run(capsys, ["catalog", "--p", "7", "--max", "3", "--theorem", "final"])
        rows = lines[:-1]
        assert {(r["A"], r["B"]) for r in rows} == {(1, 1)}  # only (1, p^0) fits

    def test_deterministic_output(self, capsys):
        _, a = run(capsys, ["catalog", "--p", "3", "--max", "30", "--theorem", "final"])
        _, b = run(capsys, ["catalog", "--p", "3", "--max", "30", "--theorem", "final"])
        strip = lambda rows: [
            {k: v for k, v in r.items() if k != "timing_ms"} for r in rows
        ]
        assert strip(a) == strip(b)


class TestClassify:
    def test_memberships(self, capsys):
        code, lines = run(
            capsys, ["classify", "--p", "2", "--d", "9", "--e", "13", "--theorem", "candidates"]
        )
        assert any(m["item"] == 4 for m in lines[-1]["result"]["memberships"])

    def test_binomial_reduction(self, capsys):
        code, lines = run(
            capsys, ["classify", "--p", "5", "--d", "7", "--e", "35", "--theorem", "binomial"]
        )
        res = lines[-1]["result"]
        assert res["reduced"] == [7, 7]
        assert any(m["item"] == 9 for m in res["memberships"])


class TestCrosscheck:
    def test_p7(self, capsys):
        code, lines = run(capsys, ["crosscheck", "--p", "7", "--max", "5", "--max-r", "3"])
        assert code == 0
        rows = lines[:-1]
        row22 = next(r for r in rows if (r["A"], r["B"]) == (2, 2))
        assert row22["status"] == "violated"
        assert lines[-1]["result"]["unresolved"] == 0

    def test_p5(self, capsys):
        code, lines = run(
            capsys,
            ["crosscheck", "--p", "5", "--max", "8", "--max-r", "5", "--skip-members"],
        )
        assert lines[-1]["result"]["unresolved"] == 0
        assert lines[-1]["result"]["member_violations"] == 0


class TestCharsums:
    def test_small_suite(self, capsys):
        code, lines = run(capsys, ["charsums", "--max-q", "9", "--switch-max-r", "4"])
        assert code == 0
        assert lines[-1]["result"]["failures"] == 0
        suites = {r["suite"] for r in lines[:-1]}
        assert suites == {"gauss-modulus", "mellin", "switchsum"}

    def test_trivial_rows_only_at_q4(self, capsys):
        code, lines = run(capsys, ["charsums", "--max-q", "4", "--switch-max-r", "2"])
        mellin_rows = [r for r in lines[:-1] if r["suite"] == "mellin"]
        assert mellin_rows and all(r["q"] == 4 for r in mellin_rows)


class TestDumpCatalog:
    def test_roundtrip(self, capsys, tmp_path):
        out = tmp_path / "cat.jsonl"
        code, lines = run(
            capsys, ["dump-catalog", "--out", str(out), "--max", "40", "--p", "5"]
        )
        assert code == 0
        rows = [json.loads(line) for line in out.read_text().splitlines()]
        assert rows and all(r["p"] == 5 for r in rows)
        assert lines[-1]["result"]["rows"] == len(rows)
