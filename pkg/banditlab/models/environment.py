"""
Environment Types
"""
from dataclasses import dataclass
from typing import (
    List,
    Optional
)

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    model_validator
)

from banditlab.models.enums import (
    EnvKind,
    NoiseType,
    SYNTHETIC_KINDS,
    DATASET_KINDS
)

# A single arm x in R^d with unit Euclidean norm
ArmContext = np.ndarray

UNIT_NORM_TOLERANCE = 1e-9

class EnvSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: EnvKind = EnvKind.QUADRATIC
    dim: int = Field(default=10, ge=1)                  # d, derived from the dataset for dataset kinds
    n_arms: int = Field(default=10, ge=2)               # n, arms per round
    hidden_param: Optional[List[float]] = None          # theta*, drawn from the seed when omitted
    noise: NoiseType = NoiseType.GAUSSIAN
    noise_sigma: float = Field(default=0.05, ge=0.0)
    seed: int = Field(default=0, ge=0)
    dataset_path: Optional[str] = None                  # CSV file for dataset kinds
    label_column: str = "label"
    normalize: bool = True                              # Normalize dataset rows to unit norm

    @model_validator(mode="after")
    def _check_kind_fields(self) -> "EnvSpec":
        if self.kind in SYNTHETIC_KINDS and self.hidden_param is not None:
            theta = np.asarray(self.hidden_param, dtype=np.float64)
            if theta.shape != (self.dim,):
                raise ValueError(f"hidden_param has length {theta.shape[0]}, expected dim={self.dim}")
            if abs(np.linalg.norm(theta) - 1.0) > UNIT_NORM_TOLERANCE:
                raise ValueError("hidden_param must have unit Euclidean norm")
        if self.kind in DATASET_KINDS and not self.dataset_path:
            raise ValueError(f"Environment kind '{self.kind.value}' requires a dataset_path")
        return self

    def update(self, **kwargs) -> "EnvSpec":
        return self.model_copy(update=kwargs)

@dataclass(frozen=True)
class RoundContext:
    arms: np.ndarray                    # (n, d), one unit-norm arm per row
    expected_rewards: np.ndarray        # (n,), hidden h(x) per arm
    round_index: int                    # t >= 1

    def __post_init__(self):
        if self.arms.ndim != 2:
            raise ValueError(f"arms must be an (n, d) matrix, got shape {self.arms.shape}")
        if self.arms.shape[0] != self.expected_rewards.shape[0]:
            raise ValueError("arms and expected_rewards must have equal length")
        if self.arms.shape[0] < 1:
            raise ValueError("A round needs at least one arm")
        if np.any(self.expected_rewards < 0.0) or np.any(self.expected_rewards > 1.0):
            raise ValueError("Expected rewards must lie in [0, 1]")

    @property
    def n_arms(self) -> int:
        return self.arms.shape[0]

    @property
    def dim(self) -> int:
        return self.arms.shape[1]

    @property
    def best_index(self) -> int:
        return int(np.argmax(self.expected_rewards))

@dataclass(frozen=True)
class ClassificationDataset:
    features: np.ndarray                # (N, d0), not yet normalized
    labels: np.ndarray                  # (N,), 0-based class labels
    k: int                              # number of classes

    def __post_init__(self):
        if self.features.ndim != 2 or self.features.shape[0] != self.labels.shape[0]:
            raise ValueError("features must be an (N, d0) matrix with one label per row")
        if np.any(np.linalg.norm(self.features, axis=1) == 0.0):
            raise ValueError("Every feature vector must be non-zero")
        if np.any(self.labels < 0) or np.any(self.labels >= self.k):
            raise ValueError(f"Labels must lie in [0, {self.k})")

    @property
    def n_rows(self) -> int:
        return self.features.shape[0]

    @property
    def feature_dim(self) -> int:
        return self.features.shape[1]
