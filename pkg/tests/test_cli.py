import json

import pytest
from click.testing import CliRunner

from engine.cli import cli
from engine.core.config_manager import config_manager


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def cache_dir(tmp_path):
    config_manager.update_global("cache_dir", tmp_path / "cache")
    yield tmp_path / "cache"
    config_manager.reset()


@pytest.fixture(scope="module")
def speh_report(tmp_path_factory):
    path = tmp_path_factory.mktemp("reports") / "speh.json"
    result = CliRunner().invoke(cli, ["analyze", "--fixture", "speh_sl4R", "--no-cache", "--out", str(path)])
    assert result.exit_code == 0, result.output
    return path


def test_fixtures_command(runner):
    result = runner.invoke(cli, ["fixtures"])
    assert result.exit_code == 0
    names = [info["name"] for info in json.loads(result.output)]
    assert "speh_sl4R" in names
    assert "su63_333" in names


def test_fixtures_table(runner):
    result = runner.invoke(cli, ["fixtures", "--format", "table"])
    assert result.exit_code == 0
    assert "[0].name" in result.output
    assert '"speh_sl4R"' in result.output


def test_analyze_writes_report(speh_report):
    data = json.loads(speh_report.read_text(encoding="utf-8"))
    assert data["status"] == "complete"
    assert data["flags"]["height"] == 2
    assert data["cone_inequalities"] == [[1, -1], [0, 1]]


def test_analyze_uses_cache(runner, cache_dir):
    args = ["analyze", "--fixture", "zero_su21"]
    first = runner.invoke(cli, args)
    assert first.exit_code == 0, first.output
    assert len(list(cache_dir.glob("*.json"))) == 1
    second = runner.invoke(cli, args)
    assert second.exit_code == 0
    assert json.loads(second.output) == json.loads(first.output)


def test_analyze_bad_config(runner, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"algebra": "sl_R(4)"}), encoding="utf-8")
    result = runner.invoke(cli, ["analyze", "--config", str(path), "--no-cache"])
    assert result.exit_code == 2
    assert "error:" in result.output


def test_analyze_needs_one_source(runner):
    assert runner.invoke(cli, ["analyze", "--no-cache"]).exit_code == 2


def test_unknown_fixture(runner):
    result = runner.invoke(cli, ["analyze", "--fixture", "nope", "--no-cache"])
    assert result.exit_code == 2
    assert "unknown fixture" in result.output


def test_malformed_partition_exit_code(runner, tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text('algebra = "sl_R(4)"\n\n[orbit]\npartition = [3, 2]\n', encoding="utf-8")
    result = runner.invoke(cli, ["analyze", "--config", str(path), "--no-cache"])
    assert result.exit_code == 2
    assert "representative" in result.output


def test_verify_speh(runner):
    result = runner.invoke(cli, ["verify-speh", "--bound", "5"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["passed"] is True


def test_verify_speh_low_degree_bound(runner):
    result = runner.invoke(cli, ["verify-speh", "--max-degree", "1", "--bound", "5"])
    assert result.exit_code == 1
    assert "increase degree bound" in result.output


def test_ktypes_from_report(runner, speh_report):
    result = runner.invoke(
        cli,
        ["ktypes", "--report", str(speh_report), "--weight", "4,2", "--weight", "1,0",
         "--shift", "1,1", "--bound", "3"],
    )
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["generators"] == [[2, 0], [2, 2]]
    assert data["multiplicities"] == {"4,2": 1, "1,0": 0}
    assert data["shifted"] == [[1, 1], [3, 1], [3, 3]]
    assert {"weight": [2, 2], "multiplicity": 1} in data["ktypes"]


def test_ktypes_rejects_non_dominant_shift(runner, speh_report):
    result = runner.invoke(cli, ["ktypes", "--report", str(speh_report), "--shift", "1,3"])
    assert result.exit_code == 2


def test_cone_points(runner, speh_report):
    result = runner.invoke(
        cli, ["cone", "--report", str(speh_report), "--point", "3,1", "--point", "0,2"]
    )
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["cone_inequalities"] == [[1, -1], [0, 1]]
    assert data["contains"] == {"3,1": True, "0,2": False}


def test_cone_bad_point(runner, speh_report):
    result = runner.invoke(cli, ["cone", "--report", str(speh_report), "--point", "a,b"])
    assert result.exit_code == 2
