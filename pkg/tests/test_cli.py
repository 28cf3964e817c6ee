"""Tests for the flatmodels CLI."""

import json
import textwrap

import pytest
from typer.testing import CliRunner

from flatmodels import verify as verify_mod
from flatmodels.cli import app, main, run
from flatmodels.config.models import RunConfig
from flatmodels.counting.inputs import ModelCount

TINY_SUITE = textwrap.dedent(
    """
    suites:
      tiny:
        sweep_primes: [3, 5]
        sweep_e_max: 6
        singleton_primes: [3, 5]
        example_primes: [3, 5]
        aut_primes: [3]
        oracle_runs:
          - {p: 3, e_max: 2}
        extension_runs:
          - {p: 3, e_max: 1}
        pruning_runs:
          - {p: 3, e_max: 2}
        cancellation_runs:
          - {p: 3, e_max: 2}
        zeta_terms: 3
    """
)


class TestFlatModelsCLI:
    def setup_method(self):
        self.runner = CliRunner()

    def test_app_help(self):
        result = self.runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        for name in ("count", "table", "zeta", "dim", "census", "oracle", "verify"):
            assert name in result.stdout

    def test_version(self):
        result = self.runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert result.stdout.startswith("0.")

    def test_count(self):
        result = self.runner.invoke(app, ["count", "--p", "5", "--e", "4", "--k", "1"])
        assert result.exit_code == 0
        assert result.stdout == "8\n"

    def test_count_with_q(self):
        result = self.runner.invoke(app, ["count", "--p", "3", "--e", "4", "--q", "9"])
        assert result.exit_code == 0
        assert result.stdout == "33\n"

    def test_count_json_uses_decimal_strings(self):
        result = self.runner.invoke(app, ["count", "--p", "5", "--e", "4", "--format", "json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout) == {"p": 5, "e": 4, "q": 5, "count": "8"}

    def test_dim(self):
        result = self.runner.invoke(app, ["dim", "--p", "5", "--e", "2"])
        assert result.exit_code == 0
        assert result.stdout == "0\n"

    def test_table_csv_is_sorted(self):
        result = self.runner.invoke(
            app, ["table", "--p", "5", "--p", "3", "--e-min", "1", "--e-max", "2", "--format", "csv"]
        )
        assert result.exit_code == 0
        assert result.stdout == (
            "p,e,q,count,dimension\n"
            "3,1,3,1,0\n"
            "3,2,3,6,1\n"
            "5,1,5,1,0\n"
            "5,2,5,1,0\n"
        )

    def test_table_json_with_several_k(self):
        result = self.runner.invoke(
            app, ["table", "--p", "3", "--e", "2", "--k", "2", "--k", "1", "--format", "json"]
        )
        assert result.exit_code == 0
        rows = json.loads(result.stdout)
        assert [(r["q"], r["count"]) for r in rows] == [(3, "6"), (9, "12")]

    def test_census_rows(self):
        result = self.runner.invoke(app, ["census", "--p", "5", "--e", "7", "--format", "csv"])
        assert result.exit_code == 0
        assert result.stdout == (
            "s,t,case,r,h\n"
            "0,0,LOW_GE,0,0\n"
            "0,1,LOW_LT,0,1\n"
            "1,0,LOW_GE,0,0\n"
            "1,1,HIGH_GE,0,0\n"
        )

    def test_census_sum_agrees_with_count(self):
        summed = self.runner.invoke(app, ["census", "--p", "5", "--e", "7", "--q", "25", "--sum"])
        counted = self.runner.invoke(app, ["count", "--p", "5", "--e", "7", "--q", "25"])
        assert summed.stdout == counted.stdout == "28\n"

    def test_zeta(self):
        result = self.runner.invoke(app, ["zeta", "--p", "5", "--e", "4", "--terms", "3"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "Z(T) = 1 / ((1 - T)^3 * (1 - 5T))"
        assert lines[1] == "1 + 8T^1 + 46T^2 + ..."

    def test_zeta_json(self):
        result = self.runner.invoke(app, ["zeta", "--p", "5", "--e", "4", "--format", "json"])
        payload = json.loads(result.stdout)
        assert payload["factors"] == [{"n": 0, "multiplicity": 3}, {"n": 1, "multiplicity": 1}]

    def test_oracle_json(self):
        result = self.runner.invoke(app, ["oracle", "--p", "3", "--e", "2", "--format", "json"])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["total"] == "6"
        assert payload["cross_check_failures"] == []
        assert [c["count"] for c in payload["cells"]] == [1, 3, 1, 1]

    def test_oracle_agrees_with_count(self):
        oracle = self.runner.invoke(app, ["oracle", "--p", "3", "--e", "2", "--q", "9", "--prune"])
        assert oracle.exit_code == 0
        assert oracle.stdout.splitlines()[-1] == "total 12"

    def test_oracle_caps(self):
        result = self.runner.invoke(app, ["oracle", "--p", "3", "--e", "9"])
        assert result.exit_code == 1
        result = self.runner.invoke(app, ["oracle", "--p", "3", "--e", "8", "--q", "9"])
        assert result.exit_code == 1
        result = self.runner.invoke(
            app, ["oracle", "--p", "3", "--e", "2", "--set", "oracle.max_candidates=10"]
        )
        assert result.exit_code == 1

    def test_output_file(self, tmp_path):
        target = tmp_path / "out" / "count.txt"
        result = self.runner.invoke(app, ["count", "--p", "5", "--e", "4", "--output", str(target)])
        assert result.exit_code == 0
        assert result.stdout == ""
        assert target.read_text() == "8\n"

    def test_format_from_settings(self):
        result = self.runner.invoke(app, ["dim", "--p", "5", "--e", "4", "--set", "output.format=json"])
        assert json.loads(result.stdout)["dimension"] == 1

    def test_identical_invocations_are_byte_identical(self):
        args = ["table", "--p", "3", "--p", "7", "--e-min", "1", "--e-max", "12", "--format", "json"]
        first = self.runner.invoke(app, args)
        second = self.runner.invoke(app, args)
        assert first.stdout == second.stdout

    @pytest.mark.parametrize(
        "args",
        [
            ["count", "--p", "4", "--e", "2"],
            ["count", "--p", "5", "--e", "4", "--q", "9"],
            ["count", "--p", "5", "--e", "0"],
            ["count", "--e", "4"],
            ["table", "--p", "5", "--e-min", "3"],
            ["verify", "--suite", "nonexistent"],
        ],
    )
    def test_validation_errors_exit_one(self, args):
        result = self.runner.invoke(app, args)
        assert result.exit_code == 1

    def test_verify_small_suite(self, tmp_path):
        config = tmp_path / "flatmodels.yaml"
        config.write_text(TINY_SUITE)
        result = self.runner.invoke(app, ["verify", "--suite", "tiny", "--config", str(config)])
        assert result.exit_code == 0, result.stdout
        lines = result.stdout.splitlines()
        assert len(lines) == len(verify_mod.CHECKS)
        assert all(line.startswith("PASS ") for line in lines)

    def test_verify_failure_exits_two(self, tmp_path, monkeypatch):
        config = tmp_path / "flatmodels.yaml"
        config.write_text(TINY_SUITE)
        monkeypatch.setattr(verify_mod, "model_count", lambda inp, q: ModelCount(0))
        result = self.runner.invoke(app, ["verify", "--suite", "tiny", "--config", str(config)])
        assert result.exit_code == 2
        assert "FAIL example_reproduction" in result.stdout


class TestMainEntryPoint:
    def test_success_returns_zero(self, capsys):
        assert main(["count", "--p", "5", "--e", "4"]) == 0
        assert capsys.readouterr().out == "8\n"

    def test_unknown_flag_returns_one(self):
        assert main(["count", "--p", "5", "--e", "4", "--bogus"]) == 1

    def test_missing_option_value_returns_one(self):
        assert main(["oracle", "--p", "3", "--e"]) == 1

    def test_unknown_subcommand_returns_one(self):
        assert main(["tally", "--p", "3"]) == 1

    def test_validation_error_returns_one(self):
        assert main(["count", "--p", "9", "--e", "4"]) == 1

    def test_run_returns_status_and_text(self):
        code, text = run(RunConfig(subcommand="count", p=[3], e=2))
        assert (code, text) == (0, "6\n")
