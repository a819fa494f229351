"""Agent-based simulator of the NNS staking economy on the Internet Computer.

Deterministic throughout: populations, shock series, simulation runs, and
every exported file are pure functions of their seeds and configuration.
"""

from .charts import CHART_KINDS, emit_chart
from .dynamics import (
    ShockSeries,
    WorldState,
    adjusted_threshold,
    generate_shocks,
    initial_world,
    run_simulation,
    step_month,
)
from .errors import ConfigError, NoGovernorsError
from .metrics_io import MetricsFrame, aggregate, export_csv, export_json, import_csv
from .neurons import NeuronState, NeuronStatus
from .population import (
    AgentProfile,
    PopulationConfig,
    PopulationSummary,
    population_summary,
    sample_population,
)
from .rewards import (
    GovernorView,
    RewardOutcome,
    distribute_rewards,
    estimated_annualized_ratio,
    is_governor,
    reward_proportions,
    select_governors,
)
from .rng import Xoshiro256StarStar
from .scenarios import (
    PRESET_NAMES,
    PolicyConfig,
    ScenarioResult,
    preset,
    run_comparative,
    run_scenario,
)
from .tokenomics import (
    AgeCurve,
    DissolveCurve,
    InflationPolicy,
    MultiplierPolicy,
    SupplySchedule,
    age_multiplier,
    build_supply_schedule,
    dissolve_delay_multiplier,
    voting_power,
    yearly_inflation_rate,
)

__version__ = "0.1.0"

__all__ = [
    "AgentProfile",
    "AgeCurve",
    "CHART_KINDS",
    "ConfigError",
    "DissolveCurve",
    "GovernorView",
    "InflationPolicy",
    "MetricsFrame",
    "MultiplierPolicy",
    "NeuronState",
    "NeuronStatus",
    "NoGovernorsError",
    "PolicyConfig",
    "PopulationConfig",
    "PopulationSummary",
    "PRESET_NAMES",
    "RewardOutcome",
    "ScenarioResult",
    "ShockSeries",
    "SupplySchedule",
    "WorldState",
    "Xoshiro256StarStar",
    "adjusted_threshold",
    "age_multiplier",
    "aggregate",
    "build_supply_schedule",
    "dissolve_delay_multiplier",
    "distribute_rewards",
    "emit_chart",
    "estimated_annualized_ratio",
    "export_csv",
    "export_json",
    "generate_shocks",
    "import_csv",
    "initial_world",
    "is_governor",
    "population_summary",
    "preset",
    "reward_proportions",
    "run_comparative",
    "run_scenario",
    "run_simulation",
    "sample_population",
    "select_governors",
    "step_month",
    "voting_power",
    "yearly_inflation_rate",
]
