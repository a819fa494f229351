"""Per-agent neuron state: the liquid / staking / dissolving machine."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .tokenomics import DISSOLVE_ELIGIBILITY_MONTHS


class NeuronStatus(Enum):
    LIQUID = "liquid"
    STAKING = "staking"
    DISSOLVING = "dissolving"


@dataclass(slots=True)
class NeuronState:
    """Mutable per-agent token state.

    Invariants (enforced by the engine, checkable via :meth:`validate`):
    liquid neurons hold no stake and carry zero delay and age; staking
    neurons hold positive stake with a delay of at least six months;
    dissolving neurons hold positive stake with zero age.
    """

    agent_id: int
    status: NeuronStatus
    stake: float
    liquid_balance: float
    dissolve_delay: int   # months; frozen while staking, counts down while dissolving
    age: int              # consecutive months spent staking; resets on dissolve

    def validate(self) -> None:
        if self.stake < 0 or self.liquid_balance < 0:
            raise ValueError(f"agent {self.agent_id}: negative token amounts")
        if self.status is NeuronStatus.LIQUID:
            if self.stake != 0 or self.dissolve_delay != 0 or self.age != 0:
                raise ValueError(f"agent {self.agent_id}: liquid neuron with residual stake state")
        elif self.status is NeuronStatus.STAKING:
            if self.stake <= 0 or self.dissolve_delay < DISSOLVE_ELIGIBILITY_MONTHS:
                raise ValueError(f"agent {self.agent_id}: staking neuron violates stake/delay floor")
        else:
            if self.stake <= 0 or self.age != 0:
                raise ValueError(f"agent {self.agent_id}: dissolving neuron violates stake/age rules")
