from .enums import (
    AlgorithmType,
    EnvKind,
    NoiseType,
    LabelVariant,
    SelectionMetric
)
from .environment import (
    ArmContext,
    EnvSpec,
    RoundContext,
    ClassificationDataset
)
from .trace import (
    RegretTrace,
    AlgorithmSummary,
    Summary,
    GridPoint,
    GridResult
)

# Policy configs and RunConfig build on protocols/ and are imported from their modules

__all__ = [
    "AlgorithmType",
    "EnvKind",
    "NoiseType",
    "LabelVariant",
    "SelectionMetric",
    "ArmContext",
    "EnvSpec",
    "RoundContext",
    "ClassificationDataset",
    "RegretTrace",
    "AlgorithmSummary",
    "Summary",
    "GridPoint",
    "GridResult",
]
