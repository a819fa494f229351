"""Governor selection and the monthly reward-distribution math.

A *governor* is a neuron that is staking, or dissolving with at least six
months of delay remaining; only governors share the monthly reward pool.
Each governor's share is its multiplier-weighted stake divided by the sum
of multiplier-weighted stakes over all governors.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence

from . import tokenomics
from .errors import NoGovernorsError
from .neurons import NeuronState, NeuronStatus
from .tokenomics import MultiplierPolicy


class GovernorView(NamedTuple):
    """Immutable snapshot of one reward-eligible neuron."""

    agent_id: int
    stake: float
    age_mult: float
    delay_mult: float

    @property
    def weight(self) -> float:
        return self.stake * self.age_mult * self.delay_mult


class RewardOutcome(NamedTuple):
    """One governor's slice of a monthly pool."""

    agent_id: int
    proportion: float
    reward: float
    monthly_ratio: float       # reward / stake
    annualized_ratio: float    # 12 * reward / stake


def is_governor(neuron: NeuronState) -> bool:
    """Reward eligibility: staking, or dissolving with >= 6 months left."""
    return neuron.status is NeuronStatus.STAKING or (
        neuron.status is NeuronStatus.DISSOLVING
        and neuron.dissolve_delay >= tokenomics.DISSOLVE_ELIGIBILITY_MONTHS
    )


def select_governors(neurons: Iterable[NeuronState],
                     policy: MultiplierPolicy) -> list[GovernorView]:
    """Snapshot the reward-eligible neurons with their current multipliers."""
    return [
        GovernorView(
            agent_id=n.agent_id,
            stake=n.stake,
            age_mult=tokenomics.age_multiplier(n.age, policy),
            delay_mult=tokenomics.dissolve_delay_multiplier(n.dissolve_delay, policy),
        )
        for n in neurons
        if is_governor(n)
    ]


def governor_aggregate(governors: Iterable[GovernorView]) -> float:
    """Sum of multiplier-weighted stakes, the distribution denominator."""
    return sum(g.stake * g.age_mult * g.delay_mult for g in governors)


def reward_proportions(governors: Sequence[GovernorView]) -> list[float]:
    """Pool share per governor, aligned with the input order; sums to 1."""
    if not governors:
        raise NoGovernorsError("no governors: the monthly pool is withheld")
    total = governor_aggregate(governors)
    return [g.stake * g.age_mult * g.delay_mult / total for g in governors]


def distribute_rewards(governors: Sequence[GovernorView],
                       pool: float) -> list[RewardOutcome]:
    """Split ``pool`` tokens over the governors by their proportions."""
    if pool < 0:
        raise ValueError(f"reward pool must be >= 0, got {pool}")
    outcomes = []
    for g, p in zip(governors, reward_proportions(governors)):
        reward = pool * p
        monthly = reward / g.stake
        outcomes.append(RewardOutcome(g.agent_id, p, reward, monthly, 12.0 * monthly))
    return outcomes


def estimated_annualized_ratio(candidate_delay: float,
                               governors: Sequence[GovernorView],
                               pool: float,
                               policy: MultiplierPolicy) -> float:
    """Prospective age-zero annualized yield for a would-be staker.

    Evaluates the candidate's delay multiplier against the *current*
    governor aggregate, without adding the candidate's own stake to the
    denominator. Below the six-month floor the ratio is 0 by definition.
    With no governors at all it is ``inf``: the first staker would capture
    the entire pool.
    """
    if pool < 0:
        raise ValueError(f"reward pool must be >= 0, got {pool}")
    delay_mult = tokenomics.dissolve_delay_multiplier(candidate_delay, policy)
    if delay_mult == 0.0:
        return 0.0
    if not governors:
        return math.inf
    return 12.0 * pool * delay_mult / governor_aggregate(governors)
