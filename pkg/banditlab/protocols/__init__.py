from .environment import BaseEnvironment
from .policy import (
    BasePolicyConfig,
    BasePolicy,
    BaseNeuralPolicy
)

__all__ = [
    "BaseEnvironment",
    "BasePolicyConfig",
    "BasePolicy",
    "BaseNeuralPolicy",
]
