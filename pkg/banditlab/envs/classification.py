"""
Dataset-backed environments.
- classification: one row per round, turned into k block-encoded arms
- pool: one positive and n-1 negative rows per round (recommendation style)
"""
from typing import (
    ClassVar,
    Dict,
    Optional,
    Tuple
)

import logging
logger = logging.getLogger(__name__)

import numpy as np

from banditlab.models.enums import EnvKind
from banditlab.models.environment import (
    ArmContext,
    ClassificationDataset,
    EnvSpec,
    RoundContext
)
from banditlab.protocols.environment import BaseEnvironment
from banditlab.utils.csv_loader import load_csv_dataset
from banditlab.utils.seeding import (
    Stream,
    keyed_rng
)

DEFAULT_MAX_ARM_DIM = 4096

def _unit(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x, axis=-1, keepdims=True)

def classification_to_bandit(
        dataset: ClassificationDataset,
        row_index: int,
        normalize: bool = True,
        round_index: int = 1
) -> RoundContext:
    """
    Encodes one labeled row as a bandit round.

    Parameters:
    - dataset (ClassificationDataset): the labeled rows
    - row_index (int): 0-based row to encode
    - normalize (bool): scale the feature vector to unit norm first
    - round_index (int): the round number t stored in the context

    Returns:
    k arms of dimension k*d0, arm i carries x in block i; expected reward 1
    for the block of the true class and 0 otherwise.
    """
    if not 0 <= row_index < dataset.n_rows:
        raise IndexError(f"Row {row_index} out of range for a dataset with {dataset.n_rows} rows")
    x = dataset.features[row_index]
    if normalize:
        x = _unit(x)
    k, d0 = dataset.k, dataset.feature_dim
    arms = np.zeros((k, k * d0))
    for block in range(k):
        arms[block, block * d0:(block + 1) * d0] = x
    expected = np.zeros(k)
    expected[dataset.labels[row_index]] = 1.0
    return RoundContext(arms=arms, expected_rewards=expected, round_index=round_index)

class DatasetEnvironment(BaseEnvironment):
    name: ClassVar[EnvKind]
    dataset: ClassificationDataset
    _active_round: Optional[RoundContext] = None

    def reward_of(self, arm: ArmContext, rng: np.random.Generator) -> Tuple[float, float]:
        """ Dataset arms only carry a reward within the most recent round that produced them """
        arm = self._check_arm(arm)
        if self._active_round is not None:
            matches = np.flatnonzero(np.all(self._active_round.arms == arm, axis=1))
            if matches.size:
                expected = float(self._active_round.expected_rewards[matches[0]])
                return expected, self._apply_noise(expected, rng)
        raise ValueError("Arm does not belong to the active round of this environment")

class ClassificationEnvironment(DatasetEnvironment):
    name: ClassVar[EnvKind] = EnvKind.CLASSIFICATION

    def __init__(
            self,
            spec: EnvSpec,
            dataset: Optional[ClassificationDataset] = None,
            max_arm_dim: int = DEFAULT_MAX_ARM_DIM
    ) -> None:
        self.spec = spec
        self.dataset = dataset if dataset is not None else load_csv_dataset(spec.dataset_path, spec.label_column)
        if self.dataset.k < 2:
            raise ValueError("A classification environment needs at least 2 classes")
        self.dim = self.dataset.k * self.dataset.feature_dim
        if self.dim > max_arm_dim:
            raise ValueError(
                f"k*d0 = {self.dataset.k}*{self.dataset.feature_dim} = {self.dim} exceeds the cap of {max_arm_dim}"
            )
        self.n_arms = self.dataset.k
        self._permutations: Dict[int, np.ndarray] = {}
        logger.debug(f"Classification environment: {self.dataset.n_rows} rows, k={self.n_arms}, d={self.dim}")

    def _row_order(self, epoch: int) -> np.ndarray:
        """ Rows are streamed without replacement per epoch and reshuffled between epochs """
        if epoch not in self._permutations:
            self._permutations = {epoch: keyed_rng(self.spec.seed, Stream.EPOCH, epoch).permutation(self.dataset.n_rows)}
        return self._permutations[epoch]

    def next_round(self, t: int) -> RoundContext:
        if t < 1:
            raise ValueError(f"Round index must be >= 1, got {t}")
        epoch, position = divmod(t - 1, self.dataset.n_rows)
        row = int(self._row_order(epoch)[position])
        self._active_round = classification_to_bandit(self.dataset, row, self.spec.normalize, round_index=t)
        return self._active_round

class PoolEnvironment(DatasetEnvironment):
    name: ClassVar[EnvKind] = EnvKind.POOL

    def __init__(
            self,
            spec: EnvSpec,
            dataset: Optional[ClassificationDataset] = None,
            max_arm_dim: int = DEFAULT_MAX_ARM_DIM
    ) -> None:
        self.spec = spec
        self.dataset = dataset if dataset is not None else load_csv_dataset(spec.dataset_path, spec.label_column)
        if self.dataset.k > 2:
            raise ValueError(f"A pool environment needs binary labels, got k={self.dataset.k}")
        self.dim = self.dataset.feature_dim
        if self.dim > max_arm_dim:
            raise ValueError(f"Feature dimension {self.dim} exceeds the cap of {max_arm_dim}")
        self.n_arms = spec.n_arms
        self.positives = np.flatnonzero(self.dataset.labels == 1)
        self.negatives = np.flatnonzero(self.dataset.labels == 0)
        if self.positives.size == 0:
            raise ValueError("A pool environment needs at least one row with label 1")
        if self.negatives.size < self.n_arms - 1:
            raise ValueError(
                f"A pool environment with {self.n_arms} arms needs {self.n_arms - 1} rows with label 0, "
                f"got {self.negatives.size}"
            )
        features = self.dataset.features
        self._arms = _unit(features) if spec.normalize else features

    def next_round(self, t: int) -> RoundContext:
        if t < 1:
            raise ValueError(f"Round index must be >= 1, got {t}")
        rng = keyed_rng(self.spec.seed, Stream.ARMS, t)
        positive = rng.choice(self.positives)
        negatives = rng.choice(self.negatives, size=self.n_arms - 1, replace=False)
        rows = np.concatenate([[positive], negatives])
        order = rng.permutation(self.n_arms)
        self._active_round = RoundContext(
            arms=self._arms[rows[order]].copy(),
            expected_rewards=(order == 0).astype(np.float64),
            round_index=t
        )
        return self._active_round
