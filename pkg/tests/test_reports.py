"""Verification results, text/JSON rendering, workbooks and settings."""

import json

import pytest
from openpyxl import load_workbook

from src.calculators.suites import SUITES, run_suite
from src.calculators.verification import VerificationResult, _record, _run_check, _skipped
from src.config import get_settings
from src.errors import IndexOutOfRangeError
from src.generators.excel_export import MAX_TITLE, generate_excel_report, generate_table_workbook
from src.generators.text_report import format_table, render_json, render_text


def _sample_result() -> VerificationResult:
    result = VerificationResult("demo", {"r": 2, "n": 2})
    result.checks.append(_record("ok", "passes", "a = a", True))
    result.checks.append(_record("bad", "fails", "a = b", False, "a != b"))
    result.checks.append(_skipped("n1", "not applicable", "c = c"))
    result.tables["numbers"] = [["k", "k^2"], ["1", "1"], ["2", "4"]]
    return result


class TestVerificationResult:
    def test_counts(self):
        result = _sample_result()
        assert (result.pass_count, result.fail_count, result.skip_count) == (1, 1, 1)
        assert not result.passed
        assert [c.check_id for c in result.failures()] == ["bad"]

    def test_skipped_checks_do_not_fail(self):
        result = VerificationResult("demo")
        result.checks.append(_skipped("n1", "not applicable", "c = c"))
        assert result.passed
        assert result.to_dict()["skip_count"] == 1
        assert "severity" not in result.checks[0].to_dict()

    def test_run_check_turns_errors_into_failures(self):
        def compute():
            raise IndexOutOfRangeError("X_5 does not exist")

        check = _run_check("boom", "raises", "X_5", compute)
        assert not check.passed
        assert check.witness.startswith("IndexOutOfRangeError")

    def test_run_check_records_both_sides(self):
        check = _run_check("neq", "differs", "1 = 2", lambda: (1, 2))
        assert check.witness == "lhs = 1; rhs = 2"


class TestRendering:
    def test_text(self):
        text = render_text(_sample_result())
        assert "[PASS] ok: a = a" in text
        assert "[FAIL] bad: a = b" in text
        assert "witness: a != b" in text
        assert "[SKIP] n1" in text
        assert text.endswith("1 passed, 1 failed, 1 skipped -> FAIL")

    def test_json(self):
        doc = json.loads(render_json(_sample_result()))
        assert doc["suite"] == "demo"
        assert doc["passed"] is False
        assert doc["tables"]["numbers"][2] == ["2", "4"]

    def test_table_alignment(self):
        lines = format_table([["a", "bb"], ["ccc", "d"]]).splitlines()
        assert lines[0] == "a    bb"
        assert lines[1] == "---  --"
        assert lines[2] == "ccc  d"


class TestWorkbooks:
    def test_report_sheets(self):
        wb = load_workbook(generate_excel_report([_sample_result()]))
        assert wb.sheetnames == ["Summary", "demo", "demo numbers"]
        summary = wb["Summary"]
        assert summary.cell(row=2, column=1).value == "demo"
        assert summary.cell(row=2, column=6).value == "FAIL"
        checks = wb["demo"]
        assert checks.cell(row=6, column=4).value == "FAIL"
        assert checks.cell(row=6, column=5).value == "a != b"

    def test_long_and_duplicate_titles(self):
        result = VerificationResult("a-very-long-suite-name-that-overflows")
        wb = load_workbook(generate_excel_report([result, result]))
        assert all(len(name) <= MAX_TITLE for name in wb.sheetnames)
        assert len(set(wb.sheetnames)) == 3

    def test_table_workbook(self):
        wb = load_workbook(generate_table_workbook("blocks r=2 n=2", [["lambda0", "rank"], ["(1,1)", 2]]))
        ws = wb["blocks r=2 n=2"]
        assert ws.cell(row=2, column=2).value == 2


class TestSuiteRegistry:
    def test_names(self):
        assert set(SUITES) == {"relations-Y", "relations-Hhat", "iso-roundtrip", "tau-identities", "kl", "cellular"}

    def test_unknown_suite(self):
        with pytest.raises(KeyError):
            run_suite("nonsense")

    def test_dispatch(self):
        result = run_suite("relations-Hhat", r=2, n=2)
        assert result.suite == "relations-Hhat"
        assert result.passed


class TestSettings:
    def test_defaults(self):
        settings = get_settings()
        assert settings.max_ball_length == 8
        assert settings.max_rank == 500

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("YHECKE_SAMPLES", "7")
        assert get_settings().samples == 7

    def test_bad_integer(self, monkeypatch):
        monkeypatch.setenv("YHECKE_SEED", "abc")
        with pytest.raises(ValueError):
            get_settings()
