"""Monthly simulation engine.

Each step runs a fixed phase order:

1. SNAPSHOT  - freeze the governor set and its multiplier-weighted stake.
2. REWARDS   - split the month's pool over the snapshot governors and
               credit each share to the owner's liquid balance. Months
               with no governors mint nothing.
3. DECISIONS - every agent decides against the snapshot, simultaneously:
               liquid agents stake their whole balance when the estimated
               annualized yield at their preferred delay beats their
               shock-adjusted threshold; staking agents unstake when their
               realized annualized yield falls below it, or fold accrued
               liquid rewards into their stake when the estimated yield at
               their current delay beats it; dissolving agents ride out
               the countdown.
4. APPLY     - state transitions from the decisions. A staking agent locks
               for its liquidity preference when the full dissolve curve
               rewards longer locks; under the flat multiplier it locks the
               six-month minimum, since longer locks earn nothing extra.
5. CLOCK     - staking neurons age one month (delay frozen); dissolving
               neurons count down one month and become liquid at zero.
6. SUPPLY    - add whatever was minted and advance the month.

Because decisions read only the snapshot aggregate and an agent's own
state, phases 3-5 are fused into a single pass per agent; the result is
identical to running the phases population-wide one after another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Sequence

from . import metrics_io
from .metrics_io import MetricsFrame
from .neurons import NeuronState, NeuronStatus
from .population import AgentProfile
from .rng import Xoshiro256StarStar
from .tokenomics import (
    AGE_CAP_MONTHS,
    DISSOLVE_CAP_MONTHS,
    DISSOLVE_ELIGIBILITY_MONTHS,
    DissolveCurve,
    MultiplierPolicy,
    SupplySchedule,
    age_multiplier,
    build_supply_schedule,
    dissolve_delay_multiplier,
)

if TYPE_CHECKING:
    from .scenarios import PolicyConfig


@dataclass(frozen=True)
class ShockSeries:
    """Per-month macro sentiment shocks, shared by every agent in a month.

    The threshold adjustment is the negated sentiment: good news lowers
    every staking hurdle for that month, bad news raises it.
    """

    sentiment: tuple[float, ...]
    std_dev: float
    seed: int

    def __len__(self) -> int:
        return len(self.sentiment)

    def threshold_shock(self, month: int) -> float:
        return -self.sentiment[month]


def generate_shocks(horizon: int, std_dev: float, seed: int) -> ShockSeries:
    """I.i.d. normal sentiment shocks, one per month, from a dedicated seed."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if std_dev < 0:
        raise ValueError(f"shock std dev must be >= 0, got {std_dev}")
    rng = Xoshiro256StarStar(seed)
    return ShockSeries(
        sentiment=tuple(rng.normal(0.0, std_dev) for _ in range(horizon)),
        std_dev=std_dev,
        seed=seed,
    )


def adjusted_threshold(profile: AgentProfile, month: int, shocks: ShockSeries) -> float:
    """This month's effective staking hurdle; can go negative on strong news."""
    return profile.staking_threshold + shocks.threshold_shock(month)


@dataclass
class WorldState:
    """Everything that evolves across months."""

    month: int
    current_supply: float          # tokens actually held by agents
    neurons: list[NeuronState]
    schedule: SupplySchedule
    policy: "PolicyConfig"

    @property
    def year(self) -> int:
        return self.month // 12


@lru_cache(maxsize=None)
def _dissolve_table(policy: MultiplierPolicy) -> tuple[float, ...]:
    return tuple(dissolve_delay_multiplier(d, policy) for d in range(DISSOLVE_CAP_MONTHS + 1))


@lru_cache(maxsize=None)
def _age_table(policy: MultiplierPolicy) -> tuple[float, ...]:
    return tuple(age_multiplier(a, policy) for a in range(AGE_CAP_MONTHS + 1))


def initial_world(profiles: Sequence[AgentProfile], policy: "PolicyConfig",
                  horizon: int) -> WorldState:
    """All-liquid genesis: every agent holds exactly its endowment."""
    schedule = build_supply_schedule(policy.initial_supply, horizon, policy.inflation)
    neurons = [
        NeuronState(p.agent_id, NeuronStatus.LIQUID, 0.0, p.endowment, 0, 0)
        for p in profiles
    ]
    return WorldState(
        month=0,
        current_supply=sum(p.endowment for p in profiles),
        neurons=neurons,
        schedule=schedule,
        policy=policy,
    )


def step_month(world: WorldState, profiles: Sequence[AgentProfile],
               shocks: ShockSeries) -> tuple[WorldState, MetricsFrame]:
    """Advance the world one month; returns it with that month's metrics."""
    t = world.month
    if t >= len(shocks) or t >= len(world.schedule.monthly_rewards):
        raise IndexError(f"month {t} is beyond the simulated horizon")

    multipliers = world.policy.multipliers
    d_table = _dissolve_table(multipliers)
    a_table = _age_table(multipliers)
    # Lock length chosen at stake time: the liquidity preference when longer
    # locks earn more (full curve); otherwise the six-month minimum, since a
    # flat multiplier gives no reason to lock longer.
    curve_rewards_length = multipliers.dissolve_curve is DissolveCurve.FULL_LINEAR_CURVE
    age_cap = AGE_CAP_MONTHS
    floor = DISSOLVE_ELIGIBILITY_MONTHS
    staking = NeuronStatus.STAKING
    dissolving = NeuronStatus.DISSOLVING
    liquid = NeuronStatus.LIQUID
    neurons = world.neurons
    pool = world.schedule.monthly_rewards[t]
    thr_shift = shocks.threshold_shock(t)

    # SNAPSHOT: governor aggregate before anything changes. The eligibility
    # test matches rewards.is_governor; kept inline for the hot loop.
    aggregate_weight = 0.0
    mult_sum = 0.0
    governor_count = 0
    for n in neurons:
        status = n.status
        if status is staking or (status is dissolving and n.dissolve_delay >= floor):
            mult = a_table[n.age if n.age < age_cap else age_cap] * d_table[n.dissolve_delay]
            aggregate_weight += n.stake * mult
            mult_sum += mult
            governor_count += 1

    # REWARDS: identical arithmetic to rewards.distribute_rewards, applied
    # straight onto liquid balances.
    minted = 0.0
    mean_realized = 0.0
    if governor_count and pool > 0.0:
        minted = pool
        scale = pool / aggregate_weight
        for n in neurons:
            status = n.status
            if status is staking or (status is dissolving and n.dissolve_delay >= floor):
                mult = a_table[n.age if n.age < age_cap else age_cap] * d_table[n.dissolve_delay]
                n.liquid_balance += n.stake * mult * scale
        mean_realized = 12.0 * scale * mult_sum / governor_count

    # DECISIONS + APPLY + CLOCK, fused per agent (see module docstring).
    est_scale = 12.0 * pool / aggregate_weight if governor_count else math.inf
    for i, n in enumerate(neurons):
        status = n.status
        if status is liquid:
            if n.liquid_balance > 0.0:
                profile = profiles[i]
                preference = profile.liquidity_preference
                estimated = math.inf if not governor_count else est_scale * d_table[preference]
                if estimated > profile.staking_threshold + thr_shift:
                    n.status = staking
                    n.stake = n.liquid_balance
                    n.liquid_balance = 0.0
                    n.dissolve_delay = preference if curve_rewards_length else floor
                    n.age = 1   # ages on this month's clock tick
        elif status is staking:
            profile = profiles[i]
            hurdle = profile.staking_threshold + thr_shift
            mult = a_table[n.age if n.age < age_cap else age_cap] * d_table[n.dissolve_delay]
            realized = 12.0 * pool * mult / aggregate_weight
            if realized < hurdle:
                n.status = dissolving
                n.age = 0
                n.dissolve_delay -= 1   # countdown starts immediately
            else:
                if n.liquid_balance > 0.0 and est_scale * d_table[n.dissolve_delay] > hurdle:
                    n.stake += n.liquid_balance
                    n.liquid_balance = 0.0
                n.age += 1
        else:
            n.dissolve_delay -= 1
            if n.dissolve_delay == 0:
                n.status = liquid
                n.liquid_balance += n.stake
                n.stake = 0.0

    # SUPPLY and month advance.
    world.current_supply += minted
    world.month = t + 1

    frame = metrics_io.aggregate(
        neurons,
        month=t,
        total_supply=world.current_supply,
        minted_this_month=minted,
        mean_realized_annualized_ratio=mean_realized,
    )
    return world, frame


def run_simulation(profiles: Sequence[AgentProfile], policy: "PolicyConfig",
                   horizon: int, shocks: ShockSeries) -> list[MetricsFrame]:
    """Step the all-liquid genesis world ``horizon`` months."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if len(shocks) < horizon:
        raise ValueError(f"shock series covers {len(shocks)} months, need {horizon}")
    for i, p in enumerate(profiles):
        if p.agent_id != i:
            raise ValueError("profiles must be ordered by agent_id starting at 0")
    world = initial_world(profiles, policy, horizon)
    frames = []
    for _ in range(horizon):
        world, frame = step_month(world, profiles, shocks)
        frames.append(frame)
    return frames
