"""JSON run-config parsing, defaults, and field-path errors."""

import json

import pytest

from nnsim import ConfigError
from nnsim.runconfig import default_run_config, load_run_config, parse_run_config
from nnsim.tokenomics import AgeCurve, DissolveCurve, InflationPolicy


def write_config(tmp_path, document):
    path = tmp_path / "config.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


def test_empty_document_resolves_documented_defaults():
    config = default_run_config()
    assert config.scenario == "benchmark"
    assert config.population.n_agents == 10_000
    assert config.population.endowment_mean_log == 10.57
    assert config.policy.horizon == 96
    assert config.policy.shock_std_dev == 0.01
    assert config.policy.initial_supply == 469e6
    assert config.formats == ("csv", "json", "svg")
    assert str(config.output_dir) == "out"


def test_full_document_parses(tmp_path):
    path = write_config(tmp_path, {
        "population": {"n_agents": 500, "seed": 9, "mixture_weight": 0.4},
        "policy": {"preset": "s4_hybrid"},
        "simulation": {"horizon_months": 24, "shock_std_dev": 0.02, "shock_seed": 7},
        "output": {"directory": "results", "formats": ["csv", "svg"]},
    })
    config = load_run_config(path)
    assert config.population.n_agents == 500
    assert config.population.mixture_weight == 0.4
    assert config.scenario == "s4_hybrid"
    assert config.policy.inflation is InflationPolicy.DYNAMIC_QUADRATIC
    assert config.policy.horizon == 24
    assert config.policy.shock_seed == 7
    assert config.policy.population_seed == 9   # threaded from population.seed
    assert config.formats == ("csv", "svg")
    assert str(config.output_dir) == "results"


def test_explicit_policy_fields():
    config = parse_run_config({"policy": {
        "inflation": "dynamic",
        "dissolve_curve": "full",
        "age_curve": "disabled",
        "initial_supply": 1e8,
    }})
    assert config.scenario == "custom"
    assert config.policy.inflation is InflationPolicy.DYNAMIC_QUADRATIC
    assert config.policy.multipliers.dissolve_curve is DissolveCurve.FULL_LINEAR_CURVE
    assert config.policy.multipliers.age_curve is AgeCurve.DISABLED
    assert config.policy.initial_supply == 1e8


def test_preset_and_explicit_fields_are_mutually_exclusive():
    with pytest.raises(ConfigError, match="policy.preset"):
        parse_run_config({"policy": {"preset": "benchmark", "inflation": "dynamic"}})


@pytest.mark.parametrize("document,fragment", [
    ({"population": {"n_agents": 0}}, "population.n_agents"),
    ({"population": {"n_agents": "many"}}, "population.n_agents"),
    ({"population": {"endowment_sigma_log": 0}}, "population.endowment_sigma_log"),
    ({"population": {"unknown_knob": 1}}, "population.unknown_knob"),
    ({"policy": {"preset": "s9"}}, "policy.preset"),
    ({"policy": {"inflation": "hyperbolic"}}, "policy.inflation"),
    ({"policy": {"initial_supply": -4}}, "policy.initial_supply"),
    ({"simulation": {"horizon_months": 0}}, "simulation.horizon_months"),
    ({"simulation": {"horizon_months": 9.5}}, "simulation.horizon_months"),
    ({"simulation": {"shock_std_dev": -1}}, "simulation.shock_std_dev"),
    ({"output": {"formats": ["csv", "pdf"]}}, "output.formats"),
    ({"output": {"directory": ""}}, "output.directory"),
    ({"mystery": {}}, "config.mystery"),
])
def test_errors_name_the_field_path(document, fragment):
    with pytest.raises(ConfigError, match=fragment.replace(".", r"\.")):
        parse_run_config(document)


def test_missing_file_is_a_config_error(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        load_run_config(tmp_path / "absent.json")


def test_invalid_json_is_a_config_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError, match="invalid JSON"):
        load_run_config(path)


def test_duplicate_formats_are_collapsed():
    config = parse_run_config({"output": {"formats": ["csv", "csv", "svg"]}})
    assert config.formats == ("csv", "svg")
