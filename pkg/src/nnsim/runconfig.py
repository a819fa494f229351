"""JSON run-configuration loading and validation.

A run config has four optional sections:

* ``population``: any :class:`PopulationConfig` field.
* ``policy``: either ``{"preset": <name>}`` or explicit fields
  (``inflation``, ``dissolve_curve``, ``age_curve``, ``initial_supply``);
  the two styles are mutually exclusive. Defaults to the benchmark preset.
* ``simulation``: ``horizon_months``, ``shock_std_dev``, ``shock_seed``.
* ``output``: ``directory`` and ``formats`` (subset of csv/json/svg).

Every validation failure raises :class:`ConfigError` naming the offending
field path, e.g. ``simulation.horizon_months``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import ConfigError
from .population import PopulationConfig
from .scenarios import PolicyConfig, preset
from .tokenomics import AgeCurve, DissolveCurve, InflationPolicy, MultiplierPolicy

VALID_FORMATS = ("csv", "json", "svg")
DEFAULT_FORMATS = VALID_FORMATS

_SECTIONS = ("population", "policy", "simulation", "output")
_SIMULATION_KEYS = ("horizon_months", "shock_std_dev", "shock_seed")
_POLICY_KEYS = ("preset", "inflation", "dissolve_curve", "age_curve", "initial_supply")
_OUTPUT_KEYS = ("directory", "formats")


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run configuration."""

    population: PopulationConfig
    policy: PolicyConfig
    scenario: str              # preset name, or "custom" for explicit policies
    output_dir: Path
    formats: tuple[str, ...]


def _expect_mapping(value, path: str) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(f"{path}: expected an object, got {type(value).__name__}")
    return value


def _get_int(section: dict, key: str, path: str, default: int) -> int:
    value = section.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{path}.{key}: expected an integer, got {value!r}")
    return value


def _get_number(section: dict, key: str, path: str, default: float) -> float:
    value = section.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path}.{key}: expected a number, got {value!r}")
    return float(value)


def _check_keys(section: dict, allowed, path: str) -> None:
    for key in section:
        if key not in allowed:
            raise ConfigError(f"{path}.{key}: unknown field")


def _parse_population(section: dict) -> PopulationConfig:
    allowed = {f.name for f in fields(PopulationConfig)}
    _check_keys(section, allowed, "population")
    config = PopulationConfig()
    ints = {"n_agents", "seed"}
    updates = {}
    for key, value in section.items():
        if key in ints:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"population.{key}: expected an integer, got {value!r}")
            updates[key] = value
        else:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError(f"population.{key}: expected a number, got {value!r}")
            updates[key] = float(value)
    config = replace(config, **updates)
    try:
        config.validate()
    except ConfigError as exc:
        raise ConfigError(f"population.{exc}") from None
    return config


_INFLATION = {"constant": InflationPolicy.CONSTANT_FIVE_PERCENT,
              "dynamic": InflationPolicy.DYNAMIC_QUADRATIC}
_DISSOLVE = {"fixed": DissolveCurve.FIXED_AT_SIX_MONTH_VALUE,
             "full": DissolveCurve.FULL_LINEAR_CURVE}
_AGE = {"disabled": AgeCurve.DISABLED,
        "full": AgeCurve.FULL_LINEAR_CURVE}


def _parse_enum(section: dict, key: str, mapping: dict, default):
    value = section.get(key)
    if value is None:
        return default
    if not isinstance(value, str) or value not in mapping:
        raise ConfigError(
            f"policy.{key}: expected one of {', '.join(mapping)}, got {value!r}")
    return mapping[value]


def _parse_policy(section: dict) -> tuple[PolicyConfig, str]:
    _check_keys(section, _POLICY_KEYS, "policy")
    if not section:
        return preset("benchmark"), "benchmark"
    preset_name = section.get("preset")
    explicit = [k for k in section if k != "preset"]
    if preset_name is not None:
        if explicit:
            raise ConfigError(
                f"policy.preset: mutually exclusive with explicit fields ({', '.join(explicit)})")
        if not isinstance(preset_name, str):
            raise ConfigError(f"policy.preset: expected a string, got {preset_name!r}")
        try:
            return preset(preset_name), preset_name
        except ConfigError as exc:
            raise ConfigError(f"policy.preset: {exc}") from None
    inflation = _parse_enum(section, "inflation", _INFLATION,
                            InflationPolicy.CONSTANT_FIVE_PERCENT)
    dissolve = _parse_enum(section, "dissolve_curve", _DISSOLVE,
                           DissolveCurve.FIXED_AT_SIX_MONTH_VALUE)
    age = _parse_enum(section, "age_curve", _AGE, AgeCurve.DISABLED)
    initial_supply = _get_number(section, "initial_supply", "policy", 469e6)
    if initial_supply <= 0:
        raise ConfigError(f"policy.initial_supply: must be > 0, got {initial_supply}")
    config = PolicyConfig(inflation=inflation,
                          multipliers=MultiplierPolicy(dissolve, age),
                          initial_supply=initial_supply)
    return config, "custom"


def parse_run_config(document: dict) -> RunConfig:
    """Validate a parsed JSON document and resolve all defaults."""
    _expect_mapping(document, "config")
    _check_keys(document, _SECTIONS, "config")

    population = _parse_population(_expect_mapping(document.get("population", {}), "population"))
    policy, scenario = _parse_policy(_expect_mapping(document.get("policy", {}), "policy"))

    simulation = _expect_mapping(document.get("simulation", {}), "simulation")
    _check_keys(simulation, _SIMULATION_KEYS, "simulation")
    horizon = _get_int(simulation, "horizon_months", "simulation", policy.horizon)
    if horizon < 1:
        raise ConfigError(f"simulation.horizon_months: must be >= 1, got {horizon}")
    shock_std_dev = _get_number(simulation, "shock_std_dev", "simulation", policy.shock_std_dev)
    if shock_std_dev < 0:
        raise ConfigError(f"simulation.shock_std_dev: must be >= 0, got {shock_std_dev}")
    shock_seed = _get_int(simulation, "shock_seed", "simulation", policy.shock_seed)

    output = _expect_mapping(document.get("output", {}), "output")
    _check_keys(output, _OUTPUT_KEYS, "output")
    directory = output.get("directory", "out")
    if not isinstance(directory, str) or not directory:
        raise ConfigError(f"output.directory: expected a non-empty string, got {directory!r}")
    formats = output.get("formats", list(DEFAULT_FORMATS))
    if not isinstance(formats, list) or not formats:
        raise ConfigError(f"output.formats: expected a non-empty list, got {formats!r}")
    for fmt in formats:
        if fmt not in VALID_FORMATS:
            raise ConfigError(
                f"output.formats: '{fmt}' is not one of {', '.join(VALID_FORMATS)}")

    policy = replace(policy,
                     horizon=horizon,
                     shock_std_dev=shock_std_dev,
                     shock_seed=shock_seed,
                     population_seed=population.seed)
    return RunConfig(
        population=population,
        policy=policy,
        scenario=scenario,
        output_dir=Path(directory),
        formats=tuple(dict.fromkeys(formats)),
    )


def load_run_config(path) -> RunConfig:
    """Read and validate a JSON run configuration from disk."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from None
    return parse_run_config(document)


def default_run_config() -> RunConfig:
    """The configuration an empty JSON document resolves to."""
    return parse_run_config({})
