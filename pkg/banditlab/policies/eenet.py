"""
EE-Net: an exploitation network f1 regressing the reward and an exploration
network f2 regressing the potential gain r - f1(x) from the gradient of f1.
Both networks are trained with one warm-start SGD step per round.
"""
from collections import deque
from typing import (
    Any,
    ClassVar,
    Deque,
    Dict,
    Optional,
    Tuple
)

import logging
logger = logging.getLogger(__name__)

import numpy as np

from banditlab.models.enums import (
    AlgorithmType,
    LabelVariant
)
from banditlab.models.environment import (
    ArmContext,
    RoundContext
)
from banditlab.models.policy import EENetPolicyConfig
from banditlab.nn.mlp import (
    Mlp,
    MlpConfig,
    ParamVector,
    init_mlp,
    forward,
    forward_batch,
    grad_params,
    grad_params_batch,
    sgd_step,
    squared_loss_grad
)
from banditlab.protocols.policy import BaseNeuralPolicy
from banditlab.utils.seeding import (
    Stream,
    derive_seed
)

# Below this norm the gradient block of phi is replaced by zeros
DEGENERATE_GRADIENT_NORM = 1e-12

SQRT2 = np.sqrt(2.0)

def exploration_label(variant: LabelVariant, reward: float, f1_pred: float) -> float:
    """
    The training target of f2 for one observed reward.

    Parameters:
    - variant (LabelVariant): residual (r - f1), absolute (|r - f1|) or relu (max(0, r - f1))
    - reward (float): the realized reward r
    - f1_pred (float): f1(x) before its update

    Returns:
    The label of the variant.
    """
    gain = reward - f1_pred
    match variant:
        case LabelVariant.RESIDUAL:
            return gain
        case LabelVariant.ABSOLUTE:
            return abs(gain)
        case LabelVariant.RELU:
            return max(0.0, gain)
        case _:
            raise ValueError(f"Unknown label variant '{variant}'. Supported: {[v.value for v in LabelVariant]}")

class RandomProjector:
    """ Fixed k x p matrix with entries +-1/sqrt(k), drawn once per run seed """

    def __init__(self, input_dim: int, output_dim: int, seed: int) -> None:
        if output_dim < 1:
            raise ValueError(f"Projection dimension must be >= 1, got {output_dim}")
        rng = np.random.default_rng(seed)
        self.matrix = rng.choice(np.array([-1.0, 1.0]), size=(output_dim, input_dim)) / np.sqrt(output_dim)
        self.matrix.flags.writeable = False
        self.input_dim = input_dim
        self.output_dim = output_dim

    def __call__(self, gradients: np.ndarray) -> np.ndarray:
        # (p,) -> (k,) and (n, p) -> (n, k)
        return gradients @ self.matrix.T

class IdentityProjector:
    """ Keeps the full gradient """

    def __init__(self, input_dim: int) -> None:
        self.input_dim = input_dim
        self.output_dim = input_dim

    def __call__(self, gradients: np.ndarray) -> np.ndarray:
        return gradients

class EENetPolicy(BaseNeuralPolicy):
    name: ClassVar[AlgorithmType] = AlgorithmType.EENET
    config: EENetPolicyConfig
    f2: Mlp

    def __init__(
            self,
            dim: int,
            seed: int = 0,
            parameter: Optional[Dict[str, Any]] = None,
            config: Optional[EENetPolicyConfig] = None
    ) -> None:
        super().__init__(dim, seed=seed, parameter=parameter, config=config, cls_policy_config=EENetPolicyConfig)

        self._init_exploitation(self.config.width1, self.config.depth1, self.config.lr1)
        p1 = self.f1.param_count
        if self.config.proj_dim == 0:
            self.projector = IdentityProjector(p1)
        else:
            self.projector = RandomProjector(p1, self.config.proj_dim, derive_seed(seed, Stream.PROJECTOR))

        self.lr2 = self.config.lr2
        self.variant = self.config.variant
        self.f2 = init_mlp(MlpConfig(
            input_dim=self.projector.output_dim + dim,
            width=self.config.width2,
            depth=self.config.depth2,
            seed=derive_seed(seed, Stream.EXPLORATION_NET)
        ))

        if self.config.replay < 0:
            raise ValueError(f"replay must be >= 0, got {self.config.replay}")
        # Previous samples revisited after each newest-sample step
        self.replay_buffer: Deque[Tuple[np.ndarray, float]] = deque(maxlen=max(self.config.replay - 1, 0))

        self.direction_counts: Dict[str, int] = {"upward": 0, "downward": 0, "zero": 0}
        logger.debug(
            f"EE-Net: p1={p1}, f2 input={self.f2.config.input_dim}, "
            f"variant={self.variant.value}, replay={self.config.replay}"
        )

    def _gradient_block(self, gradients: np.ndarray) -> np.ndarray:
        projected = self.projector(gradients)
        norms = np.linalg.norm(projected, axis=-1, keepdims=True)
        safe = np.where(norms >= DEGENERATE_GRADIENT_NORM, norms, 1.0)
        return np.where(norms >= DEGENERATE_GRADIENT_NORM, projected / (SQRT2 * safe), 0.0)

    def phi_from_gradient(self, gradient: ParamVector, x: ArmContext) -> np.ndarray:
        """ phi for an already computed gradient of f1 at x """
        x = np.asarray(x, dtype=np.float64)
        return np.concatenate([self._gradient_block(gradient), x / SQRT2])

    def phi(self, x: ArmContext) -> np.ndarray:
        """
        The input of the exploration network.

        Parameters:
        - x (ArmContext): a unit-norm arm vector

        Returns:
        (g'/(sqrt(2)|g'|), x/sqrt(2)) with g' the projected gradient of f1 at x.
        The first block is all zeros when |g'| < 1e-12.
        """
        return self.phi_from_gradient(grad_params(self.f1, x), x)

    def phi_batch(self, arms: np.ndarray) -> np.ndarray:
        """ Row-wise phi over an (n, d) matrix of arms """
        arms = np.asarray(arms, dtype=np.float64)
        return np.concatenate([self._gradient_block(grad_params_batch(self.f1, arms)), arms / SQRT2], axis=1)

    def exploration_scores(self, round: RoundContext) -> np.ndarray:
        return forward_batch(self.f2, self.phi_batch(round.arms))

    def select(self, round: RoundContext) -> int:
        self._check_round(round)
        exploration = self.exploration_scores(round)
        scores = self.exploitation_scores(round) + exploration
        index = int(np.argmax(scores))

        if exploration[index] > 0:
            self.direction_counts["upward"] += 1
        elif exploration[index] < 0:
            self.direction_counts["downward"] += 1
        else:
            self.direction_counts["zero"] += 1
        return index

    def update(self, x: ArmContext, reward: float) -> None:
        x = np.asarray(x, dtype=np.float64)
        self._train_on(x, reward)
        for x_old, reward_old in self.replay_buffer:
            self._train_on(x_old, reward_old)
        if self.replay_buffer.maxlen:
            self.replay_buffer.appendleft((x.copy(), reward))

    def _train_on(self, x: np.ndarray, reward: float) -> None:
        # Prediction, gradient and phi all come from f1 before its step
        pred, gradient = self.train_exploitation(x, reward)
        features = self.phi_from_gradient(gradient, x)
        label = exploration_label(self.variant, reward, pred)
        self.train_exploration(features, label)

    def train_exploration(self, features: np.ndarray, label: float) -> float:
        """
        One SGD step on L2 = 1/2 (f2(phi) - y)^2.

        Returns:
        The pre-update prediction f2(phi).
        """
        pred = forward(self.f2, features)
        gradient = grad_params(self.f2, features)
        sgd_step(self.f2, squared_loss_grad(pred, label) * gradient, self.lr2)
        return pred
