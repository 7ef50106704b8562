"""
Mid-level Orchestrator:
Handles the hyperparameter grid search of one algorithm
    grid: key -> list of values, exhaustive Cartesian product
    -> every grid point runs all seeds of the base config
    -> best = lowest mean final regret (or mean curve area), ties by parameter order
"""
from enum import Enum
from itertools import product
from typing import (
    Any,
    Dict,
    List,
    Tuple
)

import logging
logger = logging.getLogger(__name__)

import numpy as np

from banditlab.experiment_engine import (
    ExperimentEngine,
    summarize
)
from banditlab.models.enums import SelectionMetric
from banditlab.models.policy import get_policy_config_class
from banditlab.models.run import RunConfig
from banditlab.models.trace import (
    GridPoint,
    GridResult
)

def _plain(value: Any) -> Any:
    return value.value if isinstance(value, Enum) else value

class GridSearchEngine:
    experiment_engine: ExperimentEngine

    def __init__(self, experiment_engine: ExperimentEngine) -> None:
        self.experiment_engine = experiment_engine

    def grid_search(
            self,
            base: RunConfig,
            grid: Dict[str, List[Any]],
            selection_metric: SelectionMetric = SelectionMetric.FINAL
    ) -> GridResult:
        """
        Evaluates every point of the grid on the seeds of the base config.

        Parameters:
        - base (RunConfig): the run every grid point starts from
        - grid (Dict[str, List[Any]]): hyperparameter key -> candidate values
        - selection_metric (SelectionMetric): 'final' (mean final regret) or 'auc' (mean of the cumulative curves)

        Returns:
        A GridResult with the best parameters, every evaluated point and the number of runs.
        """
        if not grid or any(len(values) == 0 for values in grid.values()):
            raise ValueError("The grid must name at least one key with at least one value")
        config_class = get_policy_config_class(base.algorithm)
        unknown = sorted(set(grid) - set(config_class.hyperparameter_keys()))
        if unknown:
            raise ValueError(
                f"Unknown grid key(s) {unknown} for '{base.algorithm.value}'. "
                f"Supported: {config_class.hyperparameter_keys()}"
            )
        selection_metric = SelectionMetric(selection_metric)

        keys = sorted(grid)
        # Coerced once so that ordering compares numbers as numbers
        candidates = [[_plain(config_class.coerce(key, value)) for value in grid[key]] for key in keys]

        points: List[GridPoint] = []
        orders: List[Tuple[Any, ...]] = []
        run_count = 0
        for values in product(*candidates):
            parameters = dict(zip(keys, values))
            run_config = base.update(hyperparameters={**base.hyperparameters, **parameters})
            traces = self.experiment_engine.run(run_config)
            run_count += len(traces)

            algorithm_summary = summarize(traces)[run_config.algorithm_id]
            if selection_metric == SelectionMetric.AUC:
                metric_value = float(np.mean([trace.auc for trace in traces]))
            else:
                metric_value = algorithm_summary.mean_final_regret
            points.append(GridPoint(
                parameters=parameters,
                mean_final_regret=algorithm_summary.mean_final_regret,
                std_final_regret=algorithm_summary.std_final_regret,
                metric_value=metric_value
            ))
            orders.append(tuple(values))
            logger.info(f"Grid point {parameters}: {selection_metric.value} = {metric_value:.4f}")

        best_index = min(range(len(points)), key=lambda i: (points[i].metric_value, orders[i]))
        best = points[best_index]
        logger.info(f"Best of {len(points)} grid point(s) after {run_count} run(s): {best.parameters}")
        return GridResult(
            best_parameters=best.parameters,
            selection_metric=selection_metric,
            points=points,
            run_count=run_count
        )
