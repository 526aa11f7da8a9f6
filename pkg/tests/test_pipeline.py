import json

import pytest

from engine.core.cache import ReportCache, cache_key
from engine.core.config_manager import AnalysisConfig, ConfigManager, config_manager
from engine.core.pipeline import AnalysisPipeline, analyze
from engine.core.report import COMPLETE, NOT_SMALL, OrbitReport
from engine.errors import ConfigError, DescriptorError, InputError, StageError
from engine.fixtures.catalog import fixture_names, get_fixture, list_fixtures, predicted_self_duality
from engine.fixtures.speh import expected_shifted, verify_speh

FAST = [info["name"] for info in list_fixtures() if not info.get("slow")]
SLOW = [info["name"] for info in list_fixtures() if info.get("slow")]


def _check_expected(report, expected):
    for key, value in expected.items():
        if key == "self_dual":
            assert report.self_dual is value
        else:
            assert report.flags[key] == value, key


# fixtures
@pytest.mark.parametrize("name", FAST)
def test_fixture_reports(analysed, name):
    info = get_fixture(name)
    report = analysed(name).report
    _check_expected(report, info["expected"])
    if info["expected"]["small"] and info["expected"]["spherical"]:
        assert report.status == COMPLETE
        assert report.gy_condition is True
        assert report.exact_sequence is True
        assert report.desingularization["resolution_check"] is True
    predicted = info.get("predicted_self_dual")
    if predicted is not None:
        assert report.self_dual is predicted


@pytest.mark.slow
@pytest.mark.parametrize("name", SLOW)
def test_slow_fixture_reports(analysed, name):
    _check_expected(analysed(name).report, get_fixture(name)["expected"])


def test_predicted_self_duality():
    assert predicted_self_duality("speh_sl4R") is True
    assert predicted_self_duality("sl6_2cubed_I") is False
    assert predicted_self_duality("su21_principal") is None


def test_unknown_fixture():
    with pytest.raises(InputError):
        get_fixture("nope")
    assert "speh_sl4R" in fixture_names()


# stages and reports
def test_malformed_partition_fails_in_representative_stage():
    config = config_manager.build("sl_R(4)", {"partition": [3, 2]})
    with pytest.raises(StageError) as info:
        AnalysisPipeline(config).run()
    assert info.value.stage == "representative"
    assert isinstance(info.value.cause, DescriptorError)
    assert info.value.exit_code == 2


def test_not_small_orbit_gives_partial_report():
    report = AnalysisPipeline(config_manager.build("sl_R(4)", {"partition": [4]})).run()
    assert report.status == NOT_SMALL
    assert report.flags["small"] is False
    assert report.generators is None
    assert report.lattice_sample is None
    assert "grading" in report.timings
    with pytest.raises(InputError):
        report.lattice_generators


def test_speh_report(speh):
    report = speh.report
    assert report.complete
    assert report.gamma["gamma"] == [[2, 0], [2, 2]]
    assert report.gamma["dimension"] == 2
    assert [g["degree"] for g in report.generators] == [1, 2]
    assert report.generators[1]["poly"]["0,2,0"] == {"re": "-1/4", "im": "0"}
    assert report.commutative is True
    assert {"weight": [4, 2], "multiplicity": 1} in report.lattice_sample
    assert report.parameters == speh.pipeline.config.parameters()


def test_report_round_trip(speh):
    report = speh.report
    assert OrbitReport.loads(report.dumps()) == report
    with pytest.raises(InputError):
        OrbitReport.from_json({**report.to_json(), "extra": 1})
    with pytest.raises(InputError):
        OrbitReport.loads("{not json")


def test_runs_are_deterministic(speh):
    again = AnalysisPipeline(config_manager.from_fixture("speh_sl4R")).run()
    assert again.deterministic() == speh.report.deterministic()
    assert "timings" not in again.deterministic()


def test_report_cache(tmp_path, speh):
    cache = ReportCache(tmp_path)
    config = config_manager.from_fixture("speh_sl4R")
    key = cache_key(config.cache_data())
    assert cache.load(key) is None
    first = analyze(config, cache)
    assert cache.path_for(key).exists()
    assert analyze(config, cache) == first
    cache.path_for(key).write_text("garbage", encoding="utf-8")
    assert cache.load(key) is None


def test_cache_key_depends_on_parameters():
    a = config_manager.from_fixture("speh_sl4R")
    b = config_manager.from_fixture("speh_sl4R", bound=5)
    assert cache_key(a.cache_data()) != cache_key(b.cache_data())
    assert cache_key(a.cache_data()) == cache_key(dict(reversed(list(a.cache_data().items()))))


# configuration
def test_config_defaults_and_overrides():
    manager = ConfigManager()
    assert manager.get("max_degree") == 6
    manager.update_global("bound", 4)
    config = manager.from_fixture("speh_sl4R", seed=7)
    assert (config.bound, config.seed) == (4, 7)
    manager.reset()
    assert manager.get("bound") == 12
    with pytest.raises(ConfigError):
        manager.get("colour")
    with pytest.raises(ConfigError):
        manager.update_global("colour", 1)


@pytest.mark.parametrize("field, value", [("max_degree", 0), ("bound", -1), ("seed", -2), ("samples", "8")])
def test_invalid_parameters(field, value):
    with pytest.raises(ConfigError):
        config_manager.from_fixture("speh_sl4R", **{field: value})


def test_load_toml(tmp_path):
    path = tmp_path / "speh.toml"
    path.write_text(
        'algebra = "sl_R(4)"\nbound = 6\n\n[orbit]\npartition = [2, 2]\nlabel = "I"\n',
        encoding="utf-8",
    )
    config = config_manager.load(path)
    assert isinstance(config, AnalysisConfig)
    assert config.algebra.name == "sl_R(4)"
    assert config.orbit.label == "I"
    assert config.bound == 6


def test_load_json_with_fixture(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"fixture": "su21_principal", "max_degree": 3}), encoding="utf-8")
    config = config_manager.load(path, seed=5)
    assert config.algebra.name == "su(2,1)"
    assert (config.max_degree, config.seed) == (3, 5)


def test_bad_configs(tmp_path):
    missing = tmp_path / "missing.json"
    with pytest.raises(ConfigError):
        config_manager.load(missing)
    broken = tmp_path / "broken.toml"
    broken.write_text("algebra = ", encoding="utf-8")
    with pytest.raises(ConfigError):
        config_manager.load(broken)
    with pytest.raises(ConfigError):
        config_manager.from_mapping({"algebra": "sl_R(4)"})
    with pytest.raises(ConfigError):
        config_manager.from_mapping({"fixture": "speh_sl4R", "colour": "red"})
    with pytest.raises(DescriptorError):
        config_manager.from_mapping({"algebra": "sl_R(4)", "orbit": {"shape": [2, 2]}})


# Speh verification
def test_expected_shifted():
    assert expected_shifted(3) == [(1, 1), (3, 1), (3, 3)]


def test_verify_speh_passes():
    result = verify_speh(bound=7)
    assert result.passed, [c.to_json() for c in result.failures]
    assert result.discrepancy == [(1, 3), (1, 5), (1, 7), (3, 5), (3, 7), (5, 7)]
    assert result.to_json()["passed"] is True


def test_verify_speh_with_low_degree_bound():
    result = verify_speh(max_degree=1, bound=5)
    assert not result.passed
    [failure] = result.failures
    assert failure.name == "stage:invariants"
    assert "increase degree bound" in failure.detail
