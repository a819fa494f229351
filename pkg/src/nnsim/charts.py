"""Figure rendering to standalone SVG files.

All charts are drawn with matplotlib and saved as SVG 1.1 documents.
Output is byte-deterministic for identical inputs: element ids derive from
a fixed hash salt and no creation date is embedded, so golden-file and
double-run comparisons work on raw bytes.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .metrics_io import MetricsFrame
from .population import PopulationSummary
from .tokenomics import (
    DISSOLVE_CAP_MONTHS,
    DISSOLVE_ELIGIBILITY_MONTHS,
    MultiplierPolicy,
    SupplySchedule,
    age_multiplier,
    dissolve_delay_multiplier,
)

_HASH_SALT = "nnsim"


def _save(fig, destination) -> None:
    try:
        fig.savefig(destination, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)


def _render_multiplier_curve(policy: MultiplierPolicy, destination) -> None:
    fig, ax = plt.subplots(figsize=(8, 5))
    months = range(DISSOLVE_CAP_MONTHS + 1)
    below = [m for m in months if m < DISSOLVE_ELIGIBILITY_MONTHS]
    above = [m for m in months if m >= DISSOLVE_ELIGIBILITY_MONTHS]
    # two segments so the six-month eligibility jump renders as a break
    ax.plot(below, [dissolve_delay_multiplier(m, policy) for m in below],
            color="tab:blue", label="dissolve delay multiplier")
    ax.plot(above, [dissolve_delay_multiplier(m, policy) for m in above],
            color="tab:blue")
    ax.plot(list(months), [age_multiplier(m, policy) for m in months],
            color="tab:orange", label="age multiplier")
    ax.set_title("Voting-power multipliers")
    ax.set_xlabel("months")
    ax.set_ylabel("multiplier")
    ax.legend()
    _save(fig, destination)


def _render_inflation_supply(schedule: SupplySchedule, destination) -> None:
    fig, ax = plt.subplots(figsize=(8, 5))
    years = range(schedule.years)
    ax.plot(list(years), [r * 100 for r in schedule.yearly_rates],
            color="tab:red", marker="o", label="inflation rate")
    ax.set_title("Yearly inflation rate and total supply")
    ax.set_xlabel("year")
    ax.set_ylabel("inflation rate (%)")
    ax2 = ax.twinx()
    ax2.plot(list(range(schedule.years + 1)), schedule.yearly_supplies,
             color="tab:blue", marker="s", label="total supply")
    ax2.set_ylabel("total supply (tokens)")
    handles1, labels1 = ax.get_legend_handles_labels()
    handles2, labels2 = ax2.get_legend_handles_labels()
    ax.legend(handles1 + handles2, labels1 + labels2, loc="center right")
    _save(fig, destination)


def _render_reward_schedule(schedule: SupplySchedule, destination) -> None:
    fig, ax = plt.subplots(figsize=(8, 5))
    months = range(len(schedule.monthly_rewards))
    ax.plot(list(months), schedule.monthly_rewards,
            color="tab:blue", label="monthly reward")
    ax.set_title("Reward distribution schedule")
    ax.set_xlabel("month")
    ax.set_ylabel("monthly reward (tokens)")
    ax2 = ax.twinx()
    ax2.step([y * 12 for y in range(schedule.years)], schedule.yearly_rewards,
             where="post", color="tab:orange", label="yearly reward")
    ax2.set_ylabel("yearly reward (tokens)")
    handles1, labels1 = ax.get_legend_handles_labels()
    handles2, labels2 = ax2.get_legend_handles_labels()
    ax.legend(handles1 + handles2, labels1 + labels2, loc="upper right")
    _save(fig, destination)


def _render_governor_counts(frames: Sequence[MetricsFrame], destination) -> None:
    fig, ax = plt.subplots(figsize=(8, 5))
    months = [f.month for f in frames]
    ax.plot(months, [f.governor_count for f in frames],
            color="tab:blue", label="governors")
    ax.set_xlabel("month")
    ax.set_ylabel("governor count")
    ax2 = ax.twinx()
    ax2.plot(months, [f.tokens_staking for f in frames],
             color="tab:green", label="staked tokens")
    ax2.plot(months, [f.tokens_staking + f.tokens_dissolving for f in frames],
             color="tab:olive", linestyle="--", label="staked + dissolving tokens")
    ax2.set_ylabel("tokens")
    ax.set_title("Governors and governance token counts")
    handles1, labels1 = ax.get_legend_handles_labels()
    handles2, labels2 = ax2.get_legend_handles_labels()
    ax.legend(handles1 + handles2, labels1 + labels2, loc="center right")
    _save(fig, destination)


def _render_token_percentages(frames: Sequence[MetricsFrame], destination) -> None:
    fig, ax = plt.subplots(figsize=(8, 5))
    months = [f.month for f in frames]
    ax.plot(months, [100 * f.pct_liquid for f in frames], label="liquid")
    ax.plot(months, [100 * f.pct_staking for f in frames], label="staking")
    ax.plot(months, [100 * f.pct_dissolving for f in frames], label="dissolving")
    ax.set_title("Token distribution by state")
    ax.set_xlabel("month")
    ax.set_ylabel("share of tokens (%)")
    ax.set_ylim(0, 100)
    ax.legend()
    _save(fig, destination)


def _render_population_histograms(summary: PopulationSummary, destination) -> None:
    fig, axes = plt.subplots(1, 3, figsize=(15, 4.5))
    titles = {
        "endowment": "Endowment (tokens)",
        "staking_threshold": "Staking threshold",
        "liquidity_preference": "Liquidity preference (months)",
    }
    for ax, feature in zip(axes, summary.features):
        widths = [b.hi - b.lo for b in feature.bins]
        ax.bar([b.lo for b in feature.bins], [b.count for b in feature.bins],
               width=widths, align="edge", label=f"n = {summary.n_agents}")
        ax.set_title(titles.get(feature.name, feature.name))
        ax.set_xlabel(feature.name)
        ax.set_ylabel("agents")
        ax.legend()
    fig.suptitle("Agent trait distributions")
    fig.tight_layout()
    _save(fig, destination)


_RENDERERS = {
    "multiplier_curve": (_render_multiplier_curve, MultiplierPolicy),
    "inflation_supply": (_render_inflation_supply, SupplySchedule),
    "reward_schedule": (_render_reward_schedule, SupplySchedule),
    "governor_counts": (_render_governor_counts, (list, tuple)),
    "token_percentages": (_render_token_percentages, (list, tuple)),
    "population_histograms": (_render_population_histograms, PopulationSummary),
}

CHART_KINDS = tuple(_RENDERERS)


def emit_chart(data, kind: str, destination) -> None:
    """Render ``data`` as the named chart kind into an SVG file."""
    try:
        renderer, expected = _RENDERERS[kind]
    except KeyError:
        raise ValueError(
            f"unknown chart kind '{kind}' (valid kinds: {', '.join(CHART_KINDS)})"
        ) from None
    if not isinstance(data, expected):
        raise TypeError(f"chart kind '{kind}' expects {expected}, got {type(data).__name__}")
    with matplotlib.rc_context({"svg.hashsalt": _HASH_SALT}):
        renderer(data, destination)
