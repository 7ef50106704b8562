""" Abstract Policy Classes """

from abc import ABC, abstractmethod
from dataclasses import fields
from enum import Enum
from typing import (
    Any,
    ClassVar,
    Dict,
    List,
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
from banditlab.nn.mlp import (
    Mlp,
    ParamVector,
    MlpConfig,
    init_mlp,
    forward,
    forward_batch,
    grad_params,
    sgd_step,
    squared_loss_grad
)
from banditlab.utils.seeding import (
    Stream,
    derive_seed,
    keyed_rng
)

class BasePolicyConfig(ABC):
    name: ClassVar[AlgorithmType]

    @classmethod
    def hyperparameter_keys(cls) -> List[str]:
        return [f.name for f in fields(cls)]

    @classmethod
    def coerce(cls, key: str, value: Any) -> Any:
        """ Converts a raw value (str or number) to the type of the field default """
        defaults = {f.name: f.default for f in fields(cls)}
        if key not in defaults:
            raise ValueError(
                f"Unknown hyperparameter '{key}' for '{cls.name.value}'. Supported: {sorted(defaults)}"
            )
        default = defaults[key]
        if isinstance(default, Enum):
            try:
                return type(default)(value)
            except ValueError:
                raise ValueError(
                    f"Invalid value '{value}' for '{key}'. Supported: {[e.value for e in type(default)]}"
                )
        if isinstance(default, bool):
            return str(value).strip().lower() in ("1", "true", "yes", "on")
        if isinstance(default, int):
            number = float(value)
            if not number.is_integer():
                raise ValueError(f"Hyperparameter '{key}' expects an integer, got {value}")
            return int(number)
        if isinstance(default, float):
            return float(value)
        return value

    def with_parameters(self, parameter: Dict[str, Any]) -> "BasePolicyConfig":
        return self.update(**{key: self.coerce(key, value) for key, value in parameter.items()})

class BasePolicy(ABC):
    # For documentation and validation purposes
    name: ClassVar[AlgorithmType]
    config: BasePolicyConfig

    @abstractmethod
    def __init__(
            self,
            dim: int,
            seed: int = 0,
            parameter: Optional[Dict[str, Any]] = None,
            config: Optional[BasePolicyConfig] = None,
            cls_policy_config: Optional[type] = None
    ) -> None:
        # Policy config (injected with Policy(config=PolicyConfig) or Policy(parameter=dict))
        if config is not None:
            self.config = config
        else:
            # Default policy config
            self.config = cls_policy_config()
        # Override the settings with a given parameter dict
        if parameter:
            self.config = self.config.with_parameters(parameter)

        if dim < 1:
            raise ValueError(f"dim must be >= 1, got {dim}")
        self.dim = dim
        self.seed = seed

        # Stream for the policy's own randomization (tie-free sampling, epsilon coins)
        self.rng = keyed_rng(seed, Stream.POLICY)

    @abstractmethod
    def select(self, round: RoundContext) -> int:
        """ Index of the arm to play """
        pass

    @abstractmethod
    def update(self, x: ArmContext, reward: float) -> None:
        """ Learn from the played arm and its realized reward """
        pass

    def _check_round(self, round: RoundContext) -> None:
        if round.dim != self.dim:
            raise ValueError(f"Round arms have dimension {round.dim}, the policy expects {self.dim}")

    @staticmethod
    def _check_reward(reward: float) -> None:
        if not np.isfinite(reward):
            raise ValueError(f"Reward must be finite, got {reward}")

class BaseNeuralPolicy(BasePolicy):
    """ A policy built on the exploitation network f1 and its single-step warm-start SGD """
    f1: Mlp

    def _init_exploitation(self, width: int, depth: int, lr: float) -> None:
        self.lr = lr
        self.f1 = init_mlp(MlpConfig(
            input_dim=self.dim,
            width=width,
            depth=depth,
            seed=derive_seed(self.seed, Stream.EXPLOITATION_NET)
        ))

    def exploitation_scores(self, round: RoundContext) -> np.ndarray:
        return forward_batch(self.f1, round.arms)

    def train_exploitation(self, x: ArmContext, reward: float) -> Tuple[float, ParamVector]:
        """
        One SGD step on L1 = 1/2 (f1(x) - r)^2.

        Returns:
        The pre-update prediction f1(x) and the pre-update gradient of f1 at x.
        """
        self._check_reward(reward)
        pred = forward(self.f1, x)
        gradient = grad_params(self.f1, x)
        sgd_step(self.f1, squared_loss_grad(pred, reward) * gradient, self.lr)
        return pred, gradient
