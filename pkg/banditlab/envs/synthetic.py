"""
Synthetic environments.
Arms are i.i.d. uniform directions on the unit sphere; the hidden reward
function h maps every unit-norm arm into [0, 1] without clamping.
"""
from abc import abstractmethod
from typing import (
    ClassVar,
    Tuple
)

import logging
logger = logging.getLogger(__name__)

import numpy as np

from banditlab.models.enums import (
    EnvKind,
    SYNTHETIC_KINDS
)
from banditlab.models.environment import (
    ArmContext,
    EnvSpec,
    RoundContext
)
from banditlab.protocols.environment import BaseEnvironment
from banditlab.utils.seeding import (
    Stream,
    keyed_rng
)

class SyntheticEnvironment(BaseEnvironment):
    name: ClassVar[EnvKind]

    def __init__(self, spec: EnvSpec) -> None:
        if spec.kind != self.name:
            raise ValueError(f"{type(self).__name__} cannot serve environment kind '{spec.kind.value}'")
        self.spec = spec
        self.dim = spec.dim
        self.n_arms = spec.n_arms

        if spec.hidden_param is not None:
            self.theta = np.asarray(spec.hidden_param, dtype=np.float64)
        else:
            theta = keyed_rng(spec.seed, Stream.HIDDEN_PARAM).standard_normal(self.dim)
            self.theta = theta / np.linalg.norm(theta)
        logger.debug(f"Environment '{self.name.value}' d={self.dim} n={self.n_arms} seed={spec.seed}")

    @abstractmethod
    def _h(self, inner: np.ndarray) -> np.ndarray:
        """ h as a function of <x, theta*> """
        pass

    def expected_rewards(self, arms: np.ndarray) -> np.ndarray:
        inner = np.clip(arms @ self.theta, -1.0, 1.0)
        return np.clip(self._h(inner), 0.0, 1.0)

    def next_round(self, t: int) -> RoundContext:
        if t < 1:
            raise ValueError(f"Round index must be >= 1, got {t}")
        rng = keyed_rng(self.spec.seed, Stream.ARMS, t)
        arms = rng.standard_normal((self.n_arms, self.dim))
        arms /= np.linalg.norm(arms, axis=1, keepdims=True)
        return RoundContext(
            arms=arms,
            expected_rewards=self.expected_rewards(arms),
            round_index=t
        )

    def reward_of(self, arm: ArmContext, rng: np.random.Generator) -> Tuple[float, float]:
        arm = self._check_arm(arm)
        expected = float(self.expected_rewards(arm[np.newaxis, :])[0])
        return expected, self._apply_noise(expected, rng)

class LinearEnvironment(SyntheticEnvironment):
    """ h(x) = (<x, theta*> + 1) / 2 """
    name: ClassVar[EnvKind] = EnvKind.LINEAR

    def _h(self, inner: np.ndarray) -> np.ndarray:
        return (inner + 1.0) / 2.0

class QuadraticEnvironment(SyntheticEnvironment):
    """ h(x) = <x, theta*>^2 """
    name: ClassVar[EnvKind] = EnvKind.QUADRATIC

    def _h(self, inner: np.ndarray) -> np.ndarray:
        return inner ** 2

class CosineEnvironment(SyntheticEnvironment):
    """ h(x) = (cos(3 pi <x, theta*>) + 1) / 2 """
    name: ClassVar[EnvKind] = EnvKind.COSINE

    def _h(self, inner: np.ndarray) -> np.ndarray:
        return (np.cos(3.0 * np.pi * inner) + 1.0) / 2.0

def get_synthetic_environment(spec: EnvSpec) -> SyntheticEnvironment:
    if spec.kind not in SYNTHETIC_KINDS:
        raise ValueError(f"'{spec.kind.value}' is not a synthetic kind. Supported: {[k.value for k in SYNTHETIC_KINDS]}")
    match spec.kind:
        case EnvKind.LINEAR:
            return LinearEnvironment(spec)
        case EnvKind.QUADRATIC:
            return QuadraticEnvironment(spec)
        case EnvKind.COSINE:
            return CosineEnvironment(spec)
