from configparser import ConfigParser
from pathlib import Path
from typing import (
    Callable,
    List,
    Sequence
)

import numpy as np
import pytest

from banditlab.experiment_engine import ExperimentEngine
from banditlab.lab import BanditLab
from banditlab.models.environment import RoundContext

def unit_rows(rng: np.random.Generator, n: int, d: int) -> np.ndarray:
    X = rng.standard_normal((n, d))
    return X / np.linalg.norm(X, axis=1, keepdims=True)

def make_round(arms: np.ndarray, expected: Sequence[float] = None, t: int = 1) -> RoundContext:
    arms = np.asarray(arms, dtype=np.float64)
    if expected is None:
        expected = np.zeros(arms.shape[0])
    return RoundContext(arms=arms, expected_rewards=np.asarray(expected, dtype=np.float64), round_index=t)

@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)

@pytest.fixture
def lab() -> BanditLab:
    """ No log file, no progress bars, sequential seeds """
    return BanditLab(verbosity=-1, log_path="", parallel_limit=1, show_progress=False)

@pytest.fixture
def engine() -> ExperimentEngine:
    """ Engine without config.ini overrides, so dataclass defaults apply """
    return ExperimentEngine(ConfigParser(), parallel_limit=1, show_progress=False)

@pytest.fixture
def write_csv(tmp_path: Path) -> Callable[..., Path]:
    def _write(name: str, header: List[str], rows: List[List[object]]) -> Path:
        path = tmp_path / name
        lines = [",".join(header)] + [",".join(str(v) for v in row) for row in rows]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path
    return _write

@pytest.fixture
def ten_class_csv(write_csv) -> Path:
    """ 50 rows, 3 features, labels 0..9 """
    rng = np.random.default_rng(7)
    rows = [[*np.round(rng.uniform(0.1, 1.0, size=3), 4), i % 10] for i in range(50)]
    return write_csv("ten_classes.csv", ["f0", "f1", "f2", "label"], rows)
