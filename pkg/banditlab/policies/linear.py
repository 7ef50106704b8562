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
from banditlab.models.policy import LinUCBPolicyConfig
from banditlab.protocols.policy import BasePolicy

class LinUCBPolicy(BasePolicy):
    """
    Ridge regression with an upper confidence bonus.
    Keeps A = lam*I + sum x x^T, b = sum r x and A^{-1} (Sherman-Morrison updates).
    """
    name: ClassVar[AlgorithmType] = AlgorithmType.LINUCB
    config: LinUCBPolicyConfig

    def __init__(
            self,
            dim: int,
            seed: int = 0,
            parameter: Optional[Dict[str, Any]] = None,
            config: Optional[LinUCBPolicyConfig] = None
    ) -> None:
        super().__init__(dim, seed=seed, parameter=parameter, config=config, cls_policy_config=LinUCBPolicyConfig)
        if self.config.lam <= 0:
            raise ValueError(f"lam must be > 0, got {self.config.lam}")
        self.alpha = self.config.alpha
        self.A = self.config.lam * np.eye(dim)
        self.A_inv = np.eye(dim) / self.config.lam
        self.b = np.zeros(dim)

    @property
    def theta_hat(self) -> np.ndarray:
        return self.A_inv @ self.b

    def scores(self, round: RoundContext) -> np.ndarray:
        """ x^T theta_hat + alpha * sqrt(x^T A^{-1} x) per arm """
        self._check_round(round)
        X = round.arms
        widths = np.einsum("ij,jk,ik->i", X, self.A_inv, X)
        return X @ self.theta_hat + self.alpha * np.sqrt(np.maximum(widths, 0.0))

    def select(self, round: RoundContext) -> int:
        return int(np.argmax(self.scores(round)))

    def update(self, x: ArmContext, reward: float) -> None:
        self._check_reward(reward)
        x = np.asarray(x, dtype=np.float64)
        self.A += np.outer(x, x)
        self.b += reward * x
        Ax = self.A_inv @ x
        self.A_inv -= np.outer(Ax, Ax) / (1.0 + x @ Ax)
