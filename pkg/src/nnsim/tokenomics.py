"""Voting-power multiplier curves and the inflation/reward schedule.

Everything here is a pure function of its arguments. The two multiplier
curves are linear between their published endpoints: dissolve delay maps
[6, 96] months onto [1.0625, 2.0] (zero below six months), and neuron age
maps [0, 48] months onto [1.0, 1.25].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

# Curve anchors, in months.
DISSOLVE_ELIGIBILITY_MONTHS = 6   # below this a neuron has no voting power
DISSOLVE_CAP_MONTHS = 96          # eight years, multiplier tops out at 2x
AGE_CAP_MONTHS = 48               # four years, multiplier tops out at 1.25x

# Value of the linear dissolve curve at the six-month eligibility floor;
# also the flat multiplier applied when the curve policy is disabled.
DISSOLVE_MULTIPLIER_AT_CUTOFF = 1.0 + DISSOLVE_ELIGIBILITY_MONTHS / DISSOLVE_CAP_MONTHS


class InflationPolicy(Enum):
    """Yearly inflation-rate policy."""

    CONSTANT_FIVE_PERCENT = "constant"
    DYNAMIC_QUADRATIC = "dynamic"


class DissolveCurve(Enum):
    """Dissolve-delay multiplier policy."""

    FIXED_AT_SIX_MONTH_VALUE = "fixed"
    FULL_LINEAR_CURVE = "full"


class AgeCurve(Enum):
    """Age multiplier policy."""

    DISABLED = "disabled"
    FULL_LINEAR_CURVE = "full"


@dataclass(frozen=True)
class MultiplierPolicy:
    """Which multiplier curves are active."""

    dissolve_curve: DissolveCurve = DissolveCurve.FULL_LINEAR_CURVE
    age_curve: AgeCurve = AgeCurve.FULL_LINEAR_CURVE


FULL_CURVES = MultiplierPolicy(DissolveCurve.FULL_LINEAR_CURVE, AgeCurve.FULL_LINEAR_CURVE)


def dissolve_delay_multiplier(delay_months: float, policy: MultiplierPolicy) -> float:
    """Reward/voting multiplier for a dissolve delay, in months.

    Zero below six months under either curve policy. The full curve rises
    linearly from 1.0625 at six months to 2.0 at 96 months and is capped
    there; the fixed policy pins every eligible neuron at 1.0625.
    """
    if delay_months < 0:
        raise ValueError(f"dissolve delay must be >= 0, got {delay_months}")
    if delay_months < DISSOLVE_ELIGIBILITY_MONTHS:
        return 0.0
    if policy.dissolve_curve is DissolveCurve.FIXED_AT_SIX_MONTH_VALUE:
        return DISSOLVE_MULTIPLIER_AT_CUTOFF
    return 1.0 + min(delay_months, DISSOLVE_CAP_MONTHS) / DISSOLVE_CAP_MONTHS


def age_multiplier(age_months: float, policy: MultiplierPolicy) -> float:
    """Reward/voting multiplier for consecutive months spent staking.

    The full curve rises linearly from 1.0 at age zero to 1.25 at 48
    months and is capped there; the disabled policy returns 1.0 always.
    """
    if age_months < 0:
        raise ValueError(f"age must be >= 0, got {age_months}")
    if policy.age_curve is AgeCurve.DISABLED:
        return 1.0
    return 1.0 + 0.25 * min(age_months, AGE_CAP_MONTHS) / AGE_CAP_MONTHS


def voting_power(stake: float, delay_months: float, age_months: float,
                 policy: MultiplierPolicy) -> float:
    """Stake scaled by both multiplier curves."""
    if stake < 0:
        raise ValueError(f"stake must be >= 0, got {stake}")
    return (stake
            * dissolve_delay_multiplier(delay_months, policy)
            * age_multiplier(age_months, policy))


def yearly_inflation_rate(year: int, policy: InflationPolicy) -> float:
    """Inflation rate for a 0-indexed year.

    The dynamic policy decays quadratically from 10% at year 0 to 5% at
    year 8 and stays at 5% afterwards; the constant policy is 5% always.
    """
    if year < 0:
        raise ValueError(f"year must be >= 0, got {year}")
    if policy is InflationPolicy.CONSTANT_FIVE_PERCENT or year > 8:
        return 0.05
    return 0.05 + 0.05 * ((8 - year) / 8) ** 2


@dataclass(frozen=True)
class SupplySchedule:
    """Precomputed token-supply and reward schedule.

    ``yearly_supplies`` has one more entry than the other yearly lists: it
    ends with the supply after the final scheduled year. Each yearly reward
    is stored as the exact supply increment, ``R[y] = I[y+1] - I[y]``, so
    minting equals reward issuance bit for bit; it matches the rate-times-
    supply product to within one float rounding step.
    """

    initial_supply: float
    yearly_rates: tuple[float, ...]      # inflation rate per scheduled year
    yearly_supplies: tuple[float, ...]   # supply at the start of each year
    yearly_rewards: tuple[float, ...]    # total reward minted per year
    monthly_rewards: tuple[float, ...]   # reward pool per month, 12 per year

    @property
    def years(self) -> int:
        return len(self.yearly_rates)

    def reward_for_month(self, month: int) -> float:
        return self.monthly_rewards[month]

    def supply_for_month(self, month: int) -> float:
        return self.yearly_supplies[month // 12]


def build_supply_schedule(initial_supply: float, horizon_months: int,
                          policy: InflationPolicy) -> SupplySchedule:
    """Compound the supply over enough whole years to cover ``horizon_months``.

    Month ``t`` belongs to year ``t // 12`` and carries that year's reward
    divided evenly across its 12 months.
    """
    if initial_supply <= 0:
        raise ValueError(f"initial supply must be > 0, got {initial_supply}")
    if horizon_months < 1:
        raise ValueError(f"horizon must be >= 1 month, got {horizon_months}")

    years = math.ceil(horizon_months / 12)
    rates = []
    supplies = [float(initial_supply)]
    rewards = []
    monthly = []
    supply = float(initial_supply)
    for year in range(years):
        rate = yearly_inflation_rate(year, policy)
        next_supply = supply + rate * supply
        # store the realized increment: supplies grow by < 2x per year, so
        # this subtraction is exact and minting equals issuance bit for bit
        reward = next_supply - supply
        rates.append(rate)
        rewards.append(reward)
        monthly.extend([reward / 12.0] * 12)
        supply = next_supply
        supplies.append(supply)
    return SupplySchedule(
        initial_supply=float(initial_supply),
        yearly_rates=tuple(rates),
        yearly_supplies=tuple(supplies),
        yearly_rewards=tuple(rewards),
        monthly_rewards=tuple(monthly),
    )
