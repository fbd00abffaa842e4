"""Command-line surface, driven through click's test runner."""

import json

import pytest
from click.testing import CliRunner

from src.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def test_blocks_table(runner):
    result = runner.invoke(cli, ["blocks", "--r", "2", "--n", "2"])
    assert result.exit_code == 0
    assert "(1,2)" in result.stdout
    assert "= 8; r^n n! = 8" in result.stdout


def test_blocks_json(runner):
    result = runner.invoke(cli, ["blocks", "--r", "1", "--n", "3", "--json"])
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert len(doc["blocks"]) == 1
    assert doc["rank_sum"] == doc["expected"] == 6


def test_blocks_r2_n3(runner):
    doc = json.loads(runner.invoke(cli, ["blocks", "--r", "2", "--n", "3", "--json"]).stdout)
    assert [b["lambda0"] for b in doc["blocks"]] == [[1, 1, 1], [1, 1, 2], [1, 2, 2], [2, 2, 2]]
    assert doc["rank_sum"] == 48


def test_verify_kl_passes(runner):
    result = runner.invoke(cli, ["verify", "kl", "--n", "2", "--maxlen", "2"])
    assert result.exit_code == 0
    assert "-> PASS" in result.stdout


def test_verify_json_report(runner):
    result = runner.invoke(cli, ["verify", "relations-Y", "--r", "2", "--n", "2", "--json"])
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert doc["suite"] == "relations-Y"
    assert doc["passed"] is True
    assert doc["fail_count"] == 0


def test_verify_guard_is_a_usage_error(runner):
    result = runner.invoke(cli, ["verify", "relations-Hhat", "--r", "4", "--n", "4"])
    assert result.exit_code == 2


def test_verify_guard_bounds_lengths_not_rank(runner):
    result = runner.invoke(cli, ["verify", "relations-Hhat", "--r", "2", "--n", "3", "--guard", "8"])
    assert result.exit_code == 0, result.output
    result = runner.invoke(cli, ["verify", "relations-Hhat", "--r", "2", "--n", "3", "--rank-guard", "8"])
    assert result.exit_code == 2
    assert "rank 48" in result.output


def test_verify_writes_workbook(runner, tmp_path):
    target = tmp_path / "report.xlsx"
    result = runner.invoke(cli, ["verify", "tau-identities", "--samples", "2", "--xlsx", str(target)])
    assert result.exit_code == 0
    assert target.read_bytes()[:2] == b"PK"


def test_malformed_word_exits_2(runner):
    result = runner.invoke(cli, ["nf", "g1 Q2", "--r", "2", "--n", "2"])
    assert result.exit_code == 2


def test_out_of_range_generator_exits_2(runner):
    result = runner.invoke(cli, ["nf", "g3", "--r", "2", "--n", "2"])
    assert result.exit_code == 2


def test_nf_text(runner):
    result = runner.invoke(cli, ["nf", "g1 X1 g1", "--r", "2", "--n", "2"])
    assert result.exit_code == 0
    assert "X[0,1]" in result.stdout


def test_nf_json_round_trip(runner, tmp_path):
    first = runner.invoke(cli, ["nf", "g1 X2", "--r", "2", "--n", "2", "--json"])
    assert first.exit_code == 0
    path = tmp_path / "elem.json"
    path.write_text(first.stdout)
    second = runner.invoke(cli, ["nf", "--input", str(path), "--json"])
    assert second.exit_code == 0
    assert json.loads(second.stdout) == json.loads(first.stdout)


def test_nf_rejects_bad_document(runner):
    result = runner.invoke(cli, ["nf", "--input", "-"], input='{"algebra": "Q", "n": 2, "terms": []}')
    assert result.exit_code == 2


def test_mul_yokonuma(runner):
    result = runner.invoke(cli, ["mul", "h1", "h1^-1", "--algebra", "Y", "--r", "3", "--n", "2", "--json"])
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert doc["algebra"] == "Y"
    assert len(doc["terms"]) == 1


def test_convert_to_matrix_model(runner):
    result = runner.invoke(cli, ["convert", "g1", "--to", "E", "--json"])
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert doc["algebra"] == "E"
    assert all(term["block"] for term in doc["terms"])


def test_convert_wrong_direction(runner):
    result = runner.invoke(cli, ["convert", "t1", "--algebra", "Y", "--to", "E"])
    assert result.exit_code == 2


def test_kl_table(runner):
    result = runner.invoke(cli, ["kl", "s1", "--n", "2"])
    assert result.exit_code == 0
    assert "q^-1" in result.stdout


def test_kl_guard(runner):
    result = runner.invoke(cli, ["kl", "s1*s0*s1*s0", "--n", "2", "--guard", "2"])
    assert result.exit_code == 2
