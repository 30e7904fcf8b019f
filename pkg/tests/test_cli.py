"""End-to-end tests of the command-line interface and scenario files."""

import json

import pytest
from click.testing import CliRunner

from posys.cli import main
from posys.scenario import dump_scenario, load_scenario, parse_scenario

SCENARIO = """\
baseline: {family: exponential, rate: 2.0}
grid: {t_min: 0.01, t_max: 5.0, count: 400, spacing: linear}
systems:
  worst_first: {topology: series, params: [2.2, 3.0, 5.0]}
  steadier: {topology: series, params: [2.8, 3.2, 3.3]}
tasks:
  - {task: check-order, relation: st, a: worst_first, b: steadier}
"""


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def scenario_file(tmp_path):
    path = tmp_path / "scenario.yaml"
    path.write_text(SCENARIO, encoding="utf-8")
    return path


class TestReproduce:
    def test_matching_case_exits_zero(self, runner, tmp_path):
        result = runner.invoke(main, ["reproduce", "--case", "CE3.1",
                                      "--out", str(tmp_path)])
        assert result.exit_code == 0, result.output
        report = json.loads(result.output)
        assert report["ok"] is True
        assert (tmp_path / "reproduce_CE3_1.json").exists()

    def test_figure_case_writes_ratio_curves(self, runner, tmp_path):
        result = runner.invoke(main, ["reproduce", "--case", "CE4.2",
                                      "--out", str(tmp_path)])
        assert result.exit_code == 0
        rhr = (tmp_path / "CE4_2_reversed_hazard_ratio.csv").read_text().splitlines()
        assert rhr[0] == "t,ratio"
        assert len(rhr) == 1001
        assert (tmp_path / "CE4_2_density_ratio.csv").exists()

    def test_output_is_deterministic(self, runner):
        first = runner.invoke(main, ["reproduce", "--case", "CE4.4"])
        second = runner.invoke(main, ["reproduce", "--case", "CE4.4"])
        assert first.output == second.output

    def test_unknown_case_is_usage_error(self, runner):
        result = runner.invoke(main, ["reproduce", "--case", "CE0.0"])
        assert result.exit_code == 2


class TestCheck:
    def test_reflexive_check_passes(self, runner, scenario_file):
        result = runner.invoke(main, ["check", "--relation", "st",
                                      "--scenario", str(scenario_file),
                                      "worst_first", "worst_first"])
        assert result.exit_code == 0
        assert json.loads(result.output)["verdict"]["holds"] is True

    def test_failing_check_exits_one(self, runner, scenario_file):
        result = runner.invoke(main, ["check", "--relation", "st",
                                      "--scenario", str(scenario_file),
                                      "worst_first", "steadier"])
        assert result.exit_code == 1
        verdict = json.loads(result.output)["verdict"]
        assert verdict["holds"] is False and verdict["witnesses"]

    def test_inline_systems(self, runner):
        result = runner.invoke(main, [
            "check", "--relation", "hr",
            "--baseline", "exponential:rate=1",
            "--topology", "series",
            "--params-a", "1,4", "--params-b", "2,3"])
        assert result.exit_code == 0, result.output

    def test_missing_inputs_is_usage_error(self, runner):
        result = runner.invoke(main, ["check", "--relation", "st"])
        assert result.exit_code == 2

    def test_bad_grid_is_usage_error(self, runner):
        result = runner.invoke(main, [
            "check", "--relation", "st", "--baseline", "exponential:rate=1",
            "--topology", "series", "--params-a", "1", "--params-b", "1",
            "--grid", "log:5:1:100"])
        assert result.exit_code == 2


class TestVerifyAndSweep:
    def test_verify_with_vector_flags(self, runner):
        result = runner.invoke(main, ["verify", "--theorem", "T3.2",
                                      "--baseline", "exponential:rate=1",
                                      "--lam", "1,4", "--mu", "2,3"])
        assert result.exit_code == 0, result.output
        assert json.loads(result.output)["consistent"] is True

    def test_verify_sampled_case(self, runner):
        result = runner.invoke(main, ["verify", "--theorem", "T4.3",
                                      "--sample", "--seed", "3"])
        assert result.exit_code == 0, result.output

    def test_verify_outlier_flags(self, runner):
        result = runner.invoke(main, ["verify", "--theorem", "T4.4",
                                      "--l1", "1", "--eta", "2", "--m1", "3",
                                      "--n1", "1", "--n2", "1"])
        assert result.exit_code == 0, result.output

    def test_sweep_consistent(self, runner):
        result = runner.invoke(main, ["sweep", "--theorem", "T3.2",
                                      "--trials", "20", "--seed", "1"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["consistent_count"] == 20

    def test_sweep_deterministic(self, runner):
        args = ["sweep", "--theorem", "T4.1", "--trials", "15", "--seed", "8"]
        assert runner.invoke(main, args).output == runner.invoke(main, args).output


class TestMajorize:
    def test_separator_grammar(self, runner):
        result = runner.invoke(main, ["majorize", "--relation", "m",
                                      "2", "2", "6", "6", "6", "6", "--",
                                      "3", "3", "5.5", "5.5", "5.5", "5.5"])
        assert result.exit_code == 0
        assert json.loads(result.output)["holds"] is True

    def test_comma_list_grammar(self, runner):
        result = runner.invoke(main, ["majorize", "--relation", "p",
                                      "2,3,5", "2.8,3.2,3.4"])
        assert result.exit_code == 0

    def test_false_relation_exits_one(self, runner):
        result = runner.invoke(main, ["majorize", "--relation", "wsup",
                                      "2,3,5", "2.8,3.2,3.4"])
        assert result.exit_code == 1
        assert json.loads(result.output)["holds"] is False

    def test_length_mismatch_is_usage_error(self, runner):
        result = runner.invoke(main, ["majorize", "--relation", "m", "1,2", "1,2,3"])
        assert result.exit_code == 2


class TestEval:
    def test_csv_columns(self, runner, tmp_path):
        result = runner.invoke(main, [
            "eval", "--baseline", "weibull:shape=2,scale=0.8",
            "--topology", "parallel", "--params", "2,3,4,5",
            "--grid", "linear:0.01:3:50", "--name", "quad", "--out", str(tmp_path)])
        assert result.exit_code == 0, result.output
        lines = (tmp_path / "quad.csv").read_text().splitlines()
        assert lines[0] == "t,survival,cdf,density,hazard,reversed_hazard"
        assert len(lines) == 51
        first = [float(v) for v in lines[1].split(",")]
        assert first[0] == 0.01 and 0.0 <= first[1] <= 1.0

    def test_scenario_systems(self, runner, scenario_file, tmp_path):
        result = runner.invoke(main, ["eval", "--scenario", str(scenario_file),
                                      "--out", str(tmp_path)])
        assert result.exit_code == 0
        assert (tmp_path / "worst_first.csv").exists()
        assert (tmp_path / "steadier.csv").exists()


class TestRun:
    def test_scenario_with_failing_check_exits_one(self, runner, scenario_file, tmp_path):
        result = runner.invoke(main, ["run", str(scenario_file), "--out", str(tmp_path)])
        assert result.exit_code == 1  # the documented survival crossing
        report = json.loads((tmp_path / "run_report.json").read_text())
        assert report["ok"] is False
        assert report["tasks"][0]["verdict"]["holds"] is False

    def test_all_passing_tasks_exit_zero(self, runner, tmp_path):
        doc = SCENARIO.replace("b: steadier", "b: worst_first")
        path = tmp_path / "ok.yaml"
        path.write_text(doc, encoding="utf-8")
        result = runner.invoke(main, ["run", str(path), "--out", str(tmp_path)])
        assert result.exit_code == 0


class TestScenarioFormat:
    def test_round_trip(self, scenario_file):
        scenario = load_scenario(scenario_file)
        again = parse_scenario(__import__("yaml").safe_load(dump_scenario(scenario)))
        assert again == scenario

    def test_undefined_reference_rejected(self):
        doc = {"baseline": {"family": "exponential", "rate": 1.0},
               "systems": {"a": {"topology": "series", "params": [1.0]}},
               "tasks": [{"task": "check-order", "relation": "st", "a": "a", "b": "ghost"}]}
        with pytest.raises(Exception, match="ghost"):
            parse_scenario(doc)

    def test_unknown_task_rejected(self):
        doc = {"baseline": {"family": "exponential", "rate": 1.0},
               "tasks": [{"task": "plot"}]}
        with pytest.raises(Exception, match="plot"):
            parse_scenario(doc)

    def test_per_system_baseline_override(self):
        doc = {"baseline": {"family": "exponential", "rate": 1.0},
               "systems": {"w": {"topology": "parallel", "params": [2.0],
                                 "baseline": {"family": "weibull", "shape": 2.0,
                                              "scale": 0.8}}}}
        scenario = parse_scenario(doc)
        assert scenario.system("w").base.to_dict()["family"] == "weibull"
