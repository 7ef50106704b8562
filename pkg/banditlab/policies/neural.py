"""
Neural baselines sharing the exploitation network f1 and its training with EE-Net.
- Neural-Epsilon: uniformly random arm with probability epsilon, else argmax f1
- NeuralUCB: f1 plus a gradient-norm confidence bonus
- NeuralTS: argmax of rewards sampled around f1 with the same confidence width
NeuralUCB and NeuralTS approximate the gradient covariance by its diagonal.
"""
from dataclasses import dataclass
from typing import (
    Any,
    ClassVar,
    Dict,
    Optional
)

import logging
logger = logging.getLogger(__name__)

import numpy as np

from banditlab.models.enums import AlgorithmType
from banditlab.models.environment import (
    ArmContext,
    RoundContext
)
from banditlab.models.policy import (
    NeuralEpsilonPolicyConfig,
    NeuralUCBPolicyConfig,
    NeuralTSPolicyConfig
)
from banditlab.nn.mlp import (
    Mlp,
    ParamVector,
    forward_batch,
    grad_params_batch
)
from banditlab.protocols.policy import BaseNeuralPolicy

@dataclass
class DiagCovariance:
    z: np.ndarray       # lam + sum over chosen arms of g*g/m, per parameter
    width: int          # m of f1

    @classmethod
    def fresh(cls, param_count: int, lam: float, width: int) -> "DiagCovariance":
        if lam <= 0:
            raise ValueError(f"lam must be > 0, got {lam}")
        return cls(z=np.full(param_count, float(lam)), width=width)

    def variance(self, gradients: np.ndarray) -> np.ndarray:
        """ sum_j g_j^2 / (m z_j), row-wise for an (n, p) matrix """
        return np.sum(gradients ** 2 / (self.width * self.z), axis=-1)

    def update(self, gradient: ParamVector) -> None:
        self.z += gradient * gradient / self.width

def neural_epsilon_select(f1: Mlp, round: RoundContext, epsilon: float, rng: np.random.Generator) -> int:
    """ One coin per round; on heads a uniformly random arm, else argmax f1 """
    if rng.random() < epsilon:
        return int(rng.integers(round.n_arms))
    return int(np.argmax(forward_batch(f1, round.arms)))

def neuralucb_scores(f1: Mlp, cov: DiagCovariance, round: RoundContext, nu: float) -> np.ndarray:
    sigma2 = cov.variance(grad_params_batch(f1, round.arms))
    return forward_batch(f1, round.arms) + nu * np.sqrt(sigma2)

def neuralucb_select(f1: Mlp, cov: DiagCovariance, round: RoundContext, nu: float) -> int:
    return int(np.argmax(neuralucb_scores(f1, cov, round, nu)))

def neuralts_samples(
        f1: Mlp,
        cov: DiagCovariance,
        round: RoundContext,
        nu: float,
        rng: np.random.Generator
) -> np.ndarray:
    """ One draw from N(f1(x_i), nu^2 sigma_i^2) per arm """
    sigma = np.sqrt(cov.variance(grad_params_batch(f1, round.arms)))
    return forward_batch(f1, round.arms) + nu * sigma * rng.standard_normal(round.n_arms)

def neuralts_select(
        f1: Mlp,
        cov: DiagCovariance,
        round: RoundContext,
        nu: float,
        rng: np.random.Generator
) -> int:
    return int(np.argmax(neuralts_samples(f1, cov, round, nu, rng)))

class NeuralEpsilonPolicy(BaseNeuralPolicy):
    name: ClassVar[AlgorithmType] = AlgorithmType.NEURALEPSILON
    config: NeuralEpsilonPolicyConfig

    def __init__(
            self,
            dim: int,
            seed: int = 0,
            parameter: Optional[Dict[str, Any]] = None,
            config: Optional[NeuralEpsilonPolicyConfig] = None
    ) -> None:
        super().__init__(dim, seed=seed, parameter=parameter, config=config, cls_policy_config=NeuralEpsilonPolicyConfig)
        if not 0.0 <= self.config.epsilon <= 1.0:
            raise ValueError(f"epsilon must be in [0, 1], got {self.config.epsilon}")
        self.epsilon = self.config.epsilon
        self._init_exploitation(self.config.width, self.config.depth, self.config.lr)

    def select(self, round: RoundContext) -> int:
        self._check_round(round)
        return neural_epsilon_select(self.f1, round, self.epsilon, self.rng)

    def update(self, x: ArmContext, reward: float) -> None:
        self.train_exploitation(x, reward)

class NeuralUCBPolicy(BaseNeuralPolicy):
    name: ClassVar[AlgorithmType] = AlgorithmType.NEURALUCB
    config: NeuralUCBPolicyConfig

    def __init__(
            self,
            dim: int,
            seed: int = 0,
            parameter: Optional[Dict[str, Any]] = None,
            config: Optional[NeuralUCBPolicyConfig] = None
    ) -> None:
        super().__init__(dim, seed=seed, parameter=parameter, config=config, cls_policy_config=NeuralUCBPolicyConfig)
        self.nu = self.config.nu
        self._init_exploitation(self.config.width, self.config.depth, self.config.lr)
        self.cov = DiagCovariance.fresh(self.f1.param_count, self.config.lam, self.config.width)

    def select(self, round: RoundContext) -> int:
        self._check_round(round)
        return neuralucb_select(self.f1, self.cov, round, self.nu)

    def update(self, x: ArmContext, reward: float) -> None:
        # Covariance takes the chosen arm's gradient at the parameters it was selected with
        _, gradient = self.train_exploitation(x, reward)
        self.cov.update(gradient)

class NeuralTSPolicy(BaseNeuralPolicy):
    name: ClassVar[AlgorithmType] = AlgorithmType.NEURALTS
    config: NeuralTSPolicyConfig

    def __init__(
            self,
            dim: int,
            seed: int = 0,
            parameter: Optional[Dict[str, Any]] = None,
            config: Optional[NeuralTSPolicyConfig] = None
    ) -> None:
        super().__init__(dim, seed=seed, parameter=parameter, config=config, cls_policy_config=NeuralTSPolicyConfig)
        self.nu = self.config.nu
        self._init_exploitation(self.config.width, self.config.depth, self.config.lr)
        self.cov = DiagCovariance.fresh(self.f1.param_count, self.config.lam, self.config.width)

    def select(self, round: RoundContext) -> int:
        self._check_round(round)
        return neuralts_select(self.f1, self.cov, round, self.nu, self.rng)

    def update(self, x: ArmContext, reward: float) -> None:
        _, gradient = self.train_exploitation(x, reward)
        self.cov.update(gradient)
