"""Policy presets and the paired-seed comparative runner.

Five named configurations: a benchmark (constant 5% inflation, flat 1.0625
dissolve multiplier, no age multiplier) and four variants that switch on
the dynamic inflation curve, the full dissolve-delay curve, the age curve,
or all three at once. Comparative runs share one population and one shock
series across every scenario so differences are attributable to policy
alone.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .dynamics import generate_shocks, run_simulation
from .errors import ConfigError
from .metrics_io import MetricsFrame
from .population import PopulationConfig, sample_population
from .tokenomics import (
    AgeCurve,
    DissolveCurve,
    InflationPolicy,
    MultiplierPolicy,
)


@dataclass(frozen=True)
class PolicyConfig:
    """One scenario's full parameterization."""

    inflation: InflationPolicy
    multipliers: MultiplierPolicy
    initial_supply: float = 469e6
    horizon: int = 96
    shock_std_dev: float = 0.01
    population_seed: int = 1
    shock_seed: int = 2


_PRESETS = {
    "benchmark": (InflationPolicy.CONSTANT_FIVE_PERCENT,
                  DissolveCurve.FIXED_AT_SIX_MONTH_VALUE, AgeCurve.DISABLED),
    "s1_inflation": (InflationPolicy.DYNAMIC_QUADRATIC,
                     DissolveCurve.FIXED_AT_SIX_MONTH_VALUE, AgeCurve.DISABLED),
    "s2_dissolve": (InflationPolicy.CONSTANT_FIVE_PERCENT,
                    DissolveCurve.FULL_LINEAR_CURVE, AgeCurve.DISABLED),
    "s3_age": (InflationPolicy.CONSTANT_FIVE_PERCENT,
               DissolveCurve.FIXED_AT_SIX_MONTH_VALUE, AgeCurve.FULL_LINEAR_CURVE),
    "s4_hybrid": (InflationPolicy.DYNAMIC_QUADRATIC,
                  DissolveCurve.FULL_LINEAR_CURVE, AgeCurve.FULL_LINEAR_CURVE),
}

PRESET_NAMES = tuple(_PRESETS)


def preset(name: str) -> PolicyConfig:
    """Named policy configuration with default supply, horizon, and seeds."""
    try:
        inflation, dissolve, age = _PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"unknown preset '{name}' (valid presets: {', '.join(PRESET_NAMES)})"
        ) from None
    return PolicyConfig(inflation=inflation,
                        multipliers=MultiplierPolicy(dissolve, age))


def series_volatility(values: Sequence[float]) -> float:
    """Standard deviation of month-over-month changes; 0 for short series."""
    if len(values) < 2:
        return 0.0
    diffs = np.diff(np.asarray(values, dtype=float))
    return float(diffs.std())


@dataclass(frozen=True)
class ScenarioResult:
    """Frames plus the headline statistics derived from them."""

    name: str
    frames: tuple[MetricsFrame, ...]
    mean_staking_ratio: float
    staking_ratio_volatility: float
    final_governor_count: int
    final_supply: float

    @classmethod
    def from_frames(cls, name: str, frames: Sequence[MetricsFrame]) -> "ScenarioResult":
        staking = [f.pct_staking for f in frames]
        return cls(
            name=name,
            frames=tuple(frames),
            mean_staking_ratio=float(np.mean(staking)),
            staking_ratio_volatility=series_volatility(staking),
            final_governor_count=frames[-1].governor_count,
            final_supply=frames[-1].total_supply,
        )


def run_scenario(name: str, policy: PolicyConfig,
                 population_config: PopulationConfig) -> ScenarioResult:
    """Run one scenario end to end; seeds come from the policy config."""
    profiles = sample_population(replace(population_config, seed=policy.population_seed))
    shocks = generate_shocks(policy.horizon, policy.shock_std_dev, policy.shock_seed)
    frames = run_simulation(profiles, policy, policy.horizon, shocks)
    return ScenarioResult.from_frames(name, frames)


def run_comparative(preset_names: Sequence[str],
                    population_config: PopulationConfig,
                    *,
                    population_seed: int | None = None,
                    shock_seed: int | None = None,
                    horizon: int | None = None,
                    shock_std_dev: float | None = None,
                    initial_supply: float | None = None) -> list[ScenarioResult]:
    """Run several presets against one shared population and shock series.

    Results come back in input order. Any keyword left as None keeps the
    preset default; whatever is resolved applies identically to every
    scenario, which is what makes the runs paired.
    """
    if not preset_names:
        raise ConfigError("at least one preset is required")
    overrides = {}
    if horizon is not None:
        overrides["horizon"] = horizon
    if shock_std_dev is not None:
        overrides["shock_std_dev"] = shock_std_dev
    if initial_supply is not None:
        overrides["initial_supply"] = initial_supply
    if population_seed is not None:
        overrides["population_seed"] = population_seed
    if shock_seed is not None:
        overrides["shock_seed"] = shock_seed
    configs = [replace(preset(name), **overrides) for name in preset_names]

    shared = configs[0]
    profiles = sample_population(replace(population_config, seed=shared.population_seed))
    shocks = generate_shocks(shared.horizon, shared.shock_std_dev, shared.shock_seed)

    results = []
    for name, config in zip(preset_names, configs):
        try:
            frames = run_simulation(profiles, config, config.horizon, shocks)
        except Exception as exc:
            raise RuntimeError(f"scenario '{name}' failed: {exc}") from exc
        results.append(ScenarioResult.from_frames(name, frames))
    return results
