"""
KernelUCB with an RBF kernel.
- posterior mean mu = k^T (K + lam I)^-1 y and variance k(x,x) - k^T (K + lam I)^-1 k
- the inverse is grown one context at a time with a block (Schur complement) update
- contexts stop being stored once the capacity is reached
"""
from typing import (
    Any,
    ClassVar,
    Dict,
    Optional,
    Tuple
)

import logging
logger = logging.getLogger(__name__)

import numpy as np

from banditlab.models.enums import AlgorithmType
from banditlab.models.environment import (
    ArmContext,
    RoundContext
)
from banditlab.models.policy import KernelUCBPolicyConfig
from banditlab.protocols.policy import BasePolicy

def rbf_kernel(X1: np.ndarray, X2: np.ndarray, lengthscale: float) -> np.ndarray:
    """ exp(-|x - x'|^2 / (2 l^2)) for every pair of rows """
    sq_dist = (
        np.sum(X1 ** 2, axis=1)[:, np.newaxis]
        + np.sum(X2 ** 2, axis=1)[np.newaxis, :]
        - 2.0 * X1 @ X2.T
    )
    return np.exp(-np.maximum(sq_dist, 0.0) / (2.0 * lengthscale ** 2))

class KernelUCBPolicy(BasePolicy):
    name: ClassVar[AlgorithmType] = AlgorithmType.KERNELUCB
    config: KernelUCBPolicyConfig

    def __init__(
            self,
            dim: int,
            seed: int = 0,
            parameter: Optional[Dict[str, Any]] = None,
            config: Optional[KernelUCBPolicyConfig] = None
    ) -> None:
        super().__init__(dim, seed=seed, parameter=parameter, config=config, cls_policy_config=KernelUCBPolicyConfig)
        if self.config.lam <= 0:
            raise ValueError(f"lam must be > 0, got {self.config.lam}")
        if self.config.lengthscale <= 0:
            raise ValueError(f"lengthscale must be > 0, got {self.config.lengthscale}")
        if self.config.capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {self.config.capacity}")
        self.nu = self.config.nu
        self.lam = self.config.lam
        self.lengthscale = self.config.lengthscale
        self.capacity = self.config.capacity

        self.contexts = np.zeros((0, dim))
        self.rewards = np.zeros(0)
        # (K + lam I)^-1 over the stored contexts
        self.K_inv = np.zeros((0, 0))
        self._weights = np.zeros(0)

    @property
    def history_size(self) -> int:
        return self.contexts.shape[0]

    def posterior(self, X: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        Posterior mean and variance at the rows of X.

        Parameters:
        - X (np.ndarray): (n, d) query points

        Returns:
        (mu, sigma2), each of length n; (0, 1) everywhere for an empty history.
        """
        X = np.asarray(X, dtype=np.float64)
        if self.history_size == 0:
            return np.zeros(X.shape[0]), np.ones(X.shape[0])
        k = rbf_kernel(X, self.contexts, self.lengthscale)
        mu = k @ self._weights
        sigma2 = 1.0 - np.sum((k @ self.K_inv) * k, axis=1)
        return mu, np.maximum(sigma2, 0.0)

    def scores(self, round: RoundContext) -> np.ndarray:
        self._check_round(round)
        mu, sigma2 = self.posterior(round.arms)
        return mu + self.nu * np.sqrt(sigma2)

    def select(self, round: RoundContext) -> int:
        return int(np.argmax(self.scores(round)))

    def update(self, x: ArmContext, reward: float) -> None:
        self._check_reward(reward)
        if self.history_size >= self.capacity:
            return
        x = np.asarray(x, dtype=np.float64)
        # k(x, x) = 1 for the RBF kernel
        corner = 1.0 + self.lam
        if self.history_size == 0:
            self.K_inv = np.array([[1.0 / corner]])
        else:
            k = rbf_kernel(self.contexts, x[np.newaxis, :], self.lengthscale)[:, 0]
            v = self.K_inv @ k
            schur = corner - k @ v
            self.K_inv = np.block([
                [self.K_inv + np.outer(v, v) / schur, -v[:, np.newaxis] / schur],
                [-v[np.newaxis, :] / schur, np.array([[1.0 / schur]])]
            ])
        self.contexts = np.vstack([self.contexts, x])
        self.rewards = np.append(self.rewards, reward)
        self._weights = self.K_inv @ self.rewards
        if self.history_size == self.capacity:
            logger.debug(f"KernelUCB reached its capacity of {self.capacity} contexts")
