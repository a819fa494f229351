"""Reward distribution against a brute-force oracle, plus edge rules."""

import math

import pytest

from nnsim import (
    GovernorView,
    NeuronState,
    NeuronStatus,
    NoGovernorsError,
    distribute_rewards,
    estimated_annualized_ratio,
    is_governor,
    reward_proportions,
    select_governors,
)
from nnsim.rng import Xoshiro256StarStar

# hand evaluations of the proportion formula, frozen as oracle constants:
# weights 100*1.0*1.0625 = 106.25 and 100*1.25*2.0 = 250, total 356.25
G1 = GovernorView(0, 100.0, 1.0, 1.0625)
G2 = GovernorView(1, 100.0, 1.25, 2.0)
P1 = 0.2982456140350877
P2 = 0.7017543859649122


def neuron(status, stake=0.0, liquid=0.0, delay=0, age=0, agent_id=0):
    return NeuronState(agent_id, status, stake, liquid, delay, age)


def test_is_governor_rule():
    assert is_governor(neuron(NeuronStatus.STAKING, stake=1.0, delay=6))
    assert is_governor(neuron(NeuronStatus.DISSOLVING, stake=1.0, delay=6))
    assert not is_governor(neuron(NeuronStatus.DISSOLVING, stake=1.0, delay=5))
    assert not is_governor(neuron(NeuronStatus.LIQUID, liquid=10.0))


def test_select_governors_empty_when_all_liquid(full_curves):
    neurons = [neuron(NeuronStatus.LIQUID, liquid=100.0, agent_id=i) for i in range(5)]
    assert select_governors(neurons, full_curves) == []


def test_select_governors_computes_multipliers(full_curves):
    neurons = [neuron(NeuronStatus.STAKING, stake=50.0, delay=12, age=0)]
    (view,) = select_governors(neurons, full_curves)
    assert view == GovernorView(0, 50.0, 1.0, 1.125)


def test_select_governors_excludes_short_dissolvers(full_curves):
    neurons = [neuron(NeuronStatus.DISSOLVING, stake=50.0, delay=5)]
    assert select_governors(neurons, full_curves) == []


def test_proportions_single_governor():
    assert reward_proportions([G1]) == [1.0]


def test_proportions_symmetric_pair():
    twins = [GovernorView(0, 100.0, 1.0, 1.0625), GovernorView(1, 100.0, 1.0, 1.0625)]
    assert reward_proportions(twins) == [0.5, 0.5]


def test_proportions_hand_oracle():
    p1, p2 = reward_proportions([G1, G2])
    assert p1 == pytest.approx(P1, abs=1e-12)
    assert p2 == pytest.approx(P2, abs=1e-12)


def test_proportions_empty_raises():
    with pytest.raises(NoGovernorsError):
        reward_proportions([])


def test_distribute_single_governor():
    (outcome,) = distribute_rewards([GovernorView(7, 1200.0, 1.0, 2.0)], 120.0)
    assert outcome.agent_id == 7
    assert outcome.proportion == 1.0
    assert outcome.reward == 120.0
    assert outcome.monthly_ratio == pytest.approx(0.1, abs=1e-15)
    assert outcome.annualized_ratio == pytest.approx(1.2, abs=1e-12)


def test_distribute_symmetric_pair():
    twins = [GovernorView(0, 100.0, 1.0, 1.0625), GovernorView(1, 100.0, 1.0, 1.0625)]
    rewards = distribute_rewards(twins, 100.0)
    assert [r.reward for r in rewards] == [50.0, 50.0]


def test_distribute_hand_oracle():
    r1, r2 = distribute_rewards([G1, G2], 1000.0)
    assert r1.reward == pytest.approx(298.2456140350877, abs=1e-9)
    assert r2.reward == pytest.approx(701.7543859649123, abs=1e-9)
    assert r1.reward + r2.reward == pytest.approx(1000.0, rel=1e-12)


def test_distribute_rejects_negative_pool():
    with pytest.raises(ValueError):
        distribute_rewards([G1], -1.0)


def test_distribute_empty_raises():
    with pytest.raises(NoGovernorsError):
        distribute_rewards([], 100.0)


def _random_governors(rng, count):
    return [
        GovernorView(
            agent_id=i,
            stake=10.0 + 1e6 * rng.random(),
            age_mult=1.0 + 0.25 * rng.random(),
            delay_mult=1.0625 + 0.9375 * rng.random(),
        )
        for i in range(count)
    ]


def test_distribution_matches_brute_force_oracle():
    # independently coded: fsum-based weights, ratios recomputed from scratch
    rng = Xoshiro256StarStar(2024)
    for trial in range(200):
        governors = _random_governors(rng, 1 + trial % 17)
        pool = 1000.0 * rng.random()
        outcomes = distribute_rewards(governors, pool)

        weights = [g.stake * g.age_mult * g.delay_mult for g in governors]
        total = math.fsum(weights)
        assert math.fsum(o.proportion for o in outcomes) == pytest.approx(1.0, abs=1e-9)
        assert math.fsum(o.reward for o in outcomes) == pytest.approx(pool, rel=1e-9)
        for o, g, w in zip(outcomes, governors, weights):
            expected_p = w / total
            assert o.proportion == pytest.approx(expected_p, rel=1e-12)
            assert o.reward == pytest.approx(pool * expected_p, rel=1e-12)
            assert o.monthly_ratio == pytest.approx(pool * expected_p / g.stake, rel=1e-12)
            assert o.annualized_ratio == pytest.approx(12 * o.monthly_ratio, rel=1e-15)


def test_proportion_monotone_in_each_factor():
    base = _random_governors(Xoshiro256StarStar(5), 6)
    p_base = reward_proportions(base)[2]
    g = base[2]
    for bump in (
        g._replace(stake=g.stake * 1.5),
        g._replace(age_mult=g.age_mult + 0.01),
        g._replace(delay_mult=g.delay_mult + 0.05),
    ):
        boosted = base[:2] + [bump] + base[3:]
        assert reward_proportions(boosted)[2] > p_base


def test_proportions_scale_invariant():
    governors = _random_governors(Xoshiro256StarStar(9), 8)
    scaled = [g._replace(stake=g.stake * 3.7) for g in governors]
    for p, q in zip(reward_proportions(governors), reward_proportions(scaled)):
        assert q == pytest.approx(p, rel=1e-12)


def test_estimated_ratio_below_floor_is_zero(full_curves):
    assert estimated_annualized_ratio(5, [G1], 1000.0, full_curves) == 0.0
    assert estimated_annualized_ratio(0, [], 1000.0, full_curves) == 0.0


def test_estimated_ratio_direct_oracle(full_curves):
    governors = [GovernorView(0, 1000.0, 1.0, 2.0)]
    value = estimated_annualized_ratio(96, governors, 10.0, full_curves)
    assert value == pytest.approx(0.12, abs=1e-12)   # 12 * 10 * 2 / 2000


def test_estimated_ratio_empty_set_is_infinite(full_curves):
    assert estimated_annualized_ratio(96, [], 10.0, full_curves) == math.inf


def test_estimated_ratio_rejects_bad_inputs(full_curves):
    with pytest.raises(ValueError):
        estimated_annualized_ratio(-1, [G1], 10.0, full_curves)
    with pytest.raises(ValueError):
        estimated_annualized_ratio(96, [G1], -10.0, full_curves)


def test_estimated_ratio_matches_realized_for_marginal_candidate(full_curves):
    # a negligible age-zero stake's realized annualized ratio converges to
    # the estimate computed before it joined
    incumbents = [GovernorView(0, 5e8, 1.2, 1.8), GovernorView(1, 2e8, 1.0, 2.0)]
    estimate = estimated_annualized_ratio(96, incumbents, 1e6, full_curves)
    tiny = GovernorView(2, 5e8 * 1e-9, 1.0, 2.0)
    outcomes = distribute_rewards(incumbents + [tiny], 1e6)
    realized = outcomes[-1].annualized_ratio
    assert realized == pytest.approx(estimate, rel=1e-6)
