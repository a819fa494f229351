"""Shared builders for hand-crafted worlds and policies."""

import pytest

from nnsim import (
    AgentProfile,
    MultiplierPolicy,
    NeuronState,
    NeuronStatus,
    PolicyConfig,
    ShockSeries,
    WorldState,
    build_supply_schedule,
)
from nnsim.tokenomics import AgeCurve, DissolveCurve, InflationPolicy

CURVE_NAMES = {
    "fixed": DissolveCurve.FIXED_AT_SIX_MONTH_VALUE,
    "full_dissolve": DissolveCurve.FULL_LINEAR_CURVE,
    "disabled": AgeCurve.DISABLED,
    "full_age": AgeCurve.FULL_LINEAR_CURVE,
}


def make_policy(inflation="constant", dissolve="full_dissolve", age="full_age",
                initial_supply=469e6, horizon=12, shock_std_dev=0.0,
                population_seed=1, shock_seed=2) -> PolicyConfig:
    kind = (InflationPolicy.CONSTANT_FIVE_PERCENT if inflation == "constant"
            else InflationPolicy.DYNAMIC_QUADRATIC)
    return PolicyConfig(
        inflation=kind,
        multipliers=MultiplierPolicy(CURVE_NAMES[dissolve], CURVE_NAMES[age]),
        initial_supply=initial_supply,
        horizon=horizon,
        shock_std_dev=shock_std_dev,
        population_seed=population_seed,
        shock_seed=shock_seed,
    )


def make_profiles(rows) -> list[AgentProfile]:
    """rows: (endowment, threshold, liquidity_preference) per agent."""
    return [
        AgentProfile(i, endowment, threshold, preference)
        for i, (endowment, threshold, preference) in enumerate(rows)
    ]


def zero_shocks(horizon: int) -> ShockSeries:
    return ShockSeries(sentiment=(0.0,) * horizon, std_dev=0.0, seed=0)


def make_world(neuron_rows, policy: PolicyConfig, horizon: int) -> WorldState:
    """neuron_rows: (status, stake, liquid_balance, delay, age) per agent."""
    neurons = [
        NeuronState(i, status, float(stake), float(liquid), delay, age)
        for i, (status, stake, liquid, delay, age) in enumerate(neuron_rows)
    ]
    held = sum(n.stake + n.liquid_balance for n in neurons)
    schedule = build_supply_schedule(policy.initial_supply, horizon, policy.inflation)
    return WorldState(month=0, current_supply=held, neurons=neurons,
                      schedule=schedule, policy=policy)


@pytest.fixture
def full_curves() -> MultiplierPolicy:
    return MultiplierPolicy(DissolveCurve.FULL_LINEAR_CURVE, AgeCurve.FULL_LINEAR_CURVE)


@pytest.fixture
def fixed_curves() -> MultiplierPolicy:
    return MultiplierPolicy(DissolveCurve.FIXED_AT_SIX_MONTH_VALUE, AgeCurve.DISABLED)


_LEGAL_TRANSITIONS = {
    (NeuronStatus.LIQUID, NeuronStatus.LIQUID),
    (NeuronStatus.LIQUID, NeuronStatus.STAKING),
    (NeuronStatus.STAKING, NeuronStatus.STAKING),
    (NeuronStatus.STAKING, NeuronStatus.DISSOLVING),
    (NeuronStatus.DISSOLVING, NeuronStatus.DISSOLVING),
    (NeuronStatus.DISSOLVING, NeuronStatus.LIQUID),
}


def audit_run(profiles, policy, horizon, shocks):
    """Step a world manually, asserting conservation and state-machine rules.

    Returns the frames. Checks per month: token conservation to 1e-9
    relative, only legal status transitions, per-neuron invariants, delay
    freeze and age discipline, and that sub-floor dissolvers earn nothing.
    """
    from nnsim import dynamics

    world = dynamics.initial_world(profiles, policy, horizon)
    frames = []
    for _ in range(horizon):
        before_total = world.current_supply
        before = [(n.status, n.dissolve_delay, n.age, n.stake, n.liquid_balance)
                  for n in world.neurons]
        world, frame = dynamics.step_month(world, profiles, shocks)
        frames.append(frame)
        after_total = sum(n.stake + n.liquid_balance for n in world.neurons)
        assert after_total == pytest.approx(before_total + frame.minted_this_month, rel=1e-9)
        assert world.current_supply == pytest.approx(after_total, rel=1e-9)
        for n, (status0, delay0, age0, stake0, liquid0) in zip(world.neurons, before):
            assert (status0, n.status) in _LEGAL_TRANSITIONS, \
                f"illegal transition {status0} -> {n.status}"
            n.validate()
            if status0 is NeuronStatus.STAKING and n.status is NeuronStatus.STAKING:
                assert n.dissolve_delay == delay0   # frozen while staking
                assert n.age == age0 + 1
            if n.status is not NeuronStatus.STAKING:
                assert n.age == 0                   # age accrues only while staking
            if status0 is NeuronStatus.DISSOLVING and delay0 < 6:
                # below the governor floor nothing is earned; balance moves
                # only by the final liquidation
                if delay0 == 1:
                    assert n.liquid_balance == liquid0 + stake0
                else:
                    assert n.liquid_balance == liquid0
    return frames
