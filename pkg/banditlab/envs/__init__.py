from typing import Optional

from banditlab.models.enums import EnvKind
from banditlab.models.environment import (
    ClassificationDataset,
    EnvSpec
)
from banditlab.protocols.environment import BaseEnvironment

from .synthetic import (
    SyntheticEnvironment,
    LinearEnvironment,
    QuadraticEnvironment,
    CosineEnvironment,
    get_synthetic_environment
)
from .classification import (
    ClassificationEnvironment,
    PoolEnvironment,
    classification_to_bandit,
    DEFAULT_MAX_ARM_DIM
)
from .regret import pseudo_regret

def get_environment(
        spec: EnvSpec,
        dataset: Optional[ClassificationDataset] = None,
        max_arm_dim: Optional[int] = None
) -> BaseEnvironment:
    """ Builds the environment for an EnvSpec """
    max_arm_dim = max_arm_dim or DEFAULT_MAX_ARM_DIM
    match spec.kind:
        case EnvKind.CLASSIFICATION:
            return ClassificationEnvironment(spec, dataset=dataset, max_arm_dim=max_arm_dim)
        case EnvKind.POOL:
            return PoolEnvironment(spec, dataset=dataset, max_arm_dim=max_arm_dim)
        case _:
            return get_synthetic_environment(spec)

__all__ = [
    "SyntheticEnvironment",
    "LinearEnvironment",
    "QuadraticEnvironment",
    "CosineEnvironment",
    "ClassificationEnvironment",
    "PoolEnvironment",
    "classification_to_bandit",
    "pseudo_regret",
    "get_environment",
]
