""" Abstract Environment Classes """

from abc import ABC, abstractmethod
from typing import (
    ClassVar,
    Tuple
)

import numpy as np

from banditlab.models.enums import (
    EnvKind,
    NoiseType
)
from banditlab.models.environment import (
    ArmContext,
    EnvSpec,
    RoundContext
)
from banditlab.utils.seeding import (
    Stream,
    keyed_rng
)

class BaseEnvironment(ABC):
    name: ClassVar[EnvKind]
    spec: EnvSpec
    dim: int
    n_arms: int

    @abstractmethod
    def next_round(self, t: int) -> RoundContext:
        """ The round t >= 1, fully determined by (spec.seed, t) """
        pass

    @abstractmethod
    def reward_of(self, arm: ArmContext, rng: np.random.Generator) -> Tuple[float, float]:
        """ (expected, realized) reward of one arm """
        pass

    def noise_rng(self, t: int, index: int) -> np.random.Generator:
        """ Noise stream keyed by (seed, t, arm index) """
        return keyed_rng(self.spec.seed, Stream.NOISE, t, index)

    def realize(self, round: RoundContext, index: int) -> Tuple[float, float]:
        """ Plays arm `index` of `round` and returns (expected, realized) """
        if not 0 <= index < round.n_arms:
            raise IndexError(f"Arm index {index} out of range for {round.n_arms} arms")
        expected = float(round.expected_rewards[index])
        return expected, self._apply_noise(expected, self.noise_rng(round.round_index, index))

    def _apply_noise(self, expected: float, rng: np.random.Generator) -> float:
        """ Realized reward in [0, 1] with mean h(x) (up to clamping for gaussian noise) """
        match self.spec.noise:
            case NoiseType.GAUSSIAN:
                return float(np.clip(expected + self.spec.noise_sigma * rng.standard_normal(), 0.0, 1.0))
            case NoiseType.BERNOULLI:
                return float(rng.random() < expected)
            case NoiseType.NONE:
                return expected
            case _:
                raise ValueError(f"Unknown noise type '{self.spec.noise}'")

    def _check_arm(self, arm: ArmContext) -> np.ndarray:
        arm = np.asarray(arm, dtype=np.float64)
        if arm.shape != (self.dim,):
            raise ValueError(f"Arm of shape {arm.shape} does not match the environment dimension {self.dim}")
        return arm
