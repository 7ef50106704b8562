"""
Regret Trace, Summary, Grid Result
"""
from dataclasses import (
    dataclass,
    field
)
from typing import (
    Any,
    Dict,
    List,
    Optional
)

import numpy as np

from banditlab.models.enums import SelectionMetric

# Slack for floating point sums of per-round regrets
REGRET_TOLERANCE = 1e-12

@dataclass
class RegretTrace:
    algorithm: str                                      # Algorithm id, e.g. 'eenet' or 'eenet-relu'
    seed: int
    cumulative: np.ndarray                              # (T,), cumulative pseudo-regret after each round
    wall_time_ms: float = 0.0
    decision_time_ms: float = 0.0                       # Time spent in select
    train_time_ms: float = 0.0                          # Time spent in update
    choices: Optional[np.ndarray] = None                # (T,), chosen arm index per round
    direction_counts: Optional[Dict[str, int]] = None   # EE-Net only

    def __post_init__(self):
        self.cumulative = np.asarray(self.cumulative, dtype=np.float64)
        if self.cumulative.ndim != 1 or self.cumulative.size < 1:
            raise ValueError("cumulative must be a non-empty vector")
        steps = np.diff(self.cumulative, prepend=0.0)
        if np.any(steps < -REGRET_TOLERANCE) or np.any(steps > 1.0 + REGRET_TOLERANCE):
            raise ValueError("Per-round regret increments must lie in [0, 1]")

    @property
    def horizon(self) -> int:
        return self.cumulative.size

    @property
    def final_regret(self) -> float:
        return float(self.cumulative[-1])

    @property
    def auc(self) -> float:
        """ Mean of the cumulative curve """
        return float(np.mean(self.cumulative))

@dataclass
class AlgorithmSummary:
    algorithm: str
    seed_count: int
    mean_final_regret: float
    std_final_regret: float                             # Sample std, 0 for a single seed
    mean_curve: np.ndarray                              # (T,), per-round mean over seeds

@dataclass
class Summary:
    algorithms: Dict[str, AlgorithmSummary] = field(default_factory=dict)   # In order of first appearance

    def __getitem__(self, algorithm: str) -> AlgorithmSummary:
        return self.algorithms[algorithm]

    @property
    def horizon(self) -> int:
        horizons = {len(s.mean_curve) for s in self.algorithms.values()}
        if len(horizons) != 1:
            raise ValueError(f"Algorithms have differing horizons: {sorted(horizons)}")
        return horizons.pop()

@dataclass
class GridPoint:
    parameters: Dict[str, Any]
    mean_final_regret: float
    std_final_regret: float
    metric_value: float                                 # What the selection compares

@dataclass
class GridResult:
    best_parameters: Dict[str, Any]
    selection_metric: SelectionMetric
    points: List[GridPoint]                             # In evaluation order
    run_count: int                                      # Number of single-seed runs executed

    @property
    def best(self) -> GridPoint:
        return next(p for p in self.points if p.parameters == self.best_parameters)
