""" Enum classes """
from typing import (
    Dict,
    Tuple
)

from enum import Enum

class AlgorithmType(str, Enum):
    EENET = "eenet"
    LINUCB = "linucb"
    KERNELUCB = "kernelucb"
    NEURALEPSILON = "neural-epsilon"
    NEURALUCB = "neuralucb"
    NEURALTS = "neuralts"
    ORACLE = "oracle"
    RANDOM = "random"

class EnvKind(str, Enum):
    QUADRATIC = "synthetic-quadratic"
    COSINE = "synthetic-cosine"
    LINEAR = "synthetic-linear"
    CLASSIFICATION = "classification"
    POOL = "pool"

class NoiseType(str, Enum):
    GAUSSIAN = "gaussian"
    BERNOULLI = "bernoulli"
    NONE = "none"

class LabelVariant(str, Enum):
    RESIDUAL = "residual"       # y1 = r - f1
    ABSOLUTE = "absolute"       # y2 = |r - f1|
    RELU = "relu"               # y3 = ReLU(r - f1)

class SelectionMetric(str, Enum):
    FINAL = "final"             # mean final cumulative regret
    AUC = "auc"                 # mean of the cumulative regret curve

SYNTHETIC_KINDS: Tuple[EnvKind, ...] = (
    EnvKind.QUADRATIC,
    EnvKind.COSINE,
    EnvKind.LINEAR,
)

DATASET_KINDS: Tuple[EnvKind, ...] = (
    EnvKind.CLASSIFICATION,
    EnvKind.POOL,
)

# Prefix of an environment token on the command line -> dataset kind
DATASET_PREFIXES: Dict[str, EnvKind] = {
    "csv": EnvKind.CLASSIFICATION,
    "pool": EnvKind.POOL,
}
