"""
Policy Config
"""

from dataclasses import (
    dataclass,
    replace
)
from typing import (
    ClassVar
)

from banditlab.protocols.policy import BasePolicyConfig

from banditlab.models.enums import (
    AlgorithmType,
    LabelVariant
)

"""
Default values, overridden by the algorithm sections of config.ini
"""
@dataclass
class EENetPolicyConfig(BasePolicyConfig):
    name: ClassVar[AlgorithmType] = AlgorithmType.EENET
    width1: int = 100                               # Width of the exploitation network f1
    depth1: int = 2
    width2: int = 100                               # Width of the exploration network f2
    depth2: int = 2
    lr1: float = 0.001
    lr2: float = 0.001
    proj_dim: int = 10                              # Size of the projected gradient; 0 keeps the full gradient
    variant: LabelVariant = LabelVariant.RESIDUAL   # Label of f2
    replay: int = 0                                 # Samples revisited per update; 0 trains on the newest sample only

    def update(self, **kwargs):
        return replace(self, **kwargs)

@dataclass
class LinUCBPolicyConfig(BasePolicyConfig):
    name: ClassVar[AlgorithmType] = AlgorithmType.LINUCB
    alpha: float = 0.1                              # Exploration constant
    lam: float = 1.0                                # Ridge parameter

    def update(self, **kwargs):
        return replace(self, **kwargs)

@dataclass
class KernelUCBPolicyConfig(BasePolicyConfig):
    name: ClassVar[AlgorithmType] = AlgorithmType.KERNELUCB
    nu: float = 0.1                                 # Exploration weight
    lam: float = 1.0                                # Regularizer
    lengthscale: float = 1.0                        # RBF lengthscale
    capacity: int = 1000                            # Stop adding contexts after this many

    def update(self, **kwargs):
        return replace(self, **kwargs)

@dataclass
class NeuralEpsilonPolicyConfig(BasePolicyConfig):
    name: ClassVar[AlgorithmType] = AlgorithmType.NEURALEPSILON
    width: int = 100
    depth: int = 2
    lr: float = 0.001
    epsilon: float = 0.1                            # Probability of a uniformly random arm

    def update(self, **kwargs):
        return replace(self, **kwargs)

@dataclass
class NeuralUCBPolicyConfig(BasePolicyConfig):
    name: ClassVar[AlgorithmType] = AlgorithmType.NEURALUCB
    width: int = 100
    depth: int = 2
    lr: float = 0.001
    nu: float = 0.1                                 # Exploration weight
    lam: float = 1.0                                # Initial value of the diagonal covariance

    def update(self, **kwargs):
        return replace(self, **kwargs)

@dataclass
class NeuralTSPolicyConfig(BasePolicyConfig):
    name: ClassVar[AlgorithmType] = AlgorithmType.NEURALTS
    width: int = 100
    depth: int = 2
    lr: float = 0.001
    nu: float = 0.1                                 # Scale of the sampling standard deviation
    lam: float = 1.0

    def update(self, **kwargs):
        return replace(self, **kwargs)

@dataclass
class OraclePolicyConfig(BasePolicyConfig):
    name: ClassVar[AlgorithmType] = AlgorithmType.ORACLE

    def update(self, **kwargs):
        return replace(self, **kwargs)

@dataclass
class RandomPolicyConfig(BasePolicyConfig):
    name: ClassVar[AlgorithmType] = AlgorithmType.RANDOM

    def update(self, **kwargs):
        return replace(self, **kwargs)

def get_policy_config_class(algorithm: AlgorithmType) -> type:
    match algorithm:
        case AlgorithmType.EENET:
            return EENetPolicyConfig
        case AlgorithmType.LINUCB:
            return LinUCBPolicyConfig
        case AlgorithmType.KERNELUCB:
            return KernelUCBPolicyConfig
        case AlgorithmType.NEURALEPSILON:
            return NeuralEpsilonPolicyConfig
        case AlgorithmType.NEURALUCB:
            return NeuralUCBPolicyConfig
        case AlgorithmType.NEURALTS:
            return NeuralTSPolicyConfig
        case AlgorithmType.ORACLE:
            return OraclePolicyConfig
        case AlgorithmType.RANDOM:
            return RandomPolicyConfig
        case _:
            raise ValueError(f"Unknown algorithm '{algorithm}'")
