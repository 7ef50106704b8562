"""
Mid-level Orchestrator:
Handles the online loop of every (algorithm, seed) run
    run: fresh environment + fresh policy per seed
    -> select → realize reward → update, T rounds
    -> pseudo-regret from the hidden expected rewards
    -> Pluggable policies by name ("eenet", "linucb", "neuralucb", etc.)
"""
from concurrent.futures import ThreadPoolExecutor
from configparser import ConfigParser
from threading import Lock
from time import perf_counter
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Tuple
)

import logging
logger = logging.getLogger(__name__)

import numpy as np
from tqdm import tqdm

from banditlab.envs import (
    DEFAULT_MAX_ARM_DIM,
    get_environment,
    pseudo_regret
)
from banditlab.models.enums import (
    AlgorithmType,
    DATASET_KINDS
)
from banditlab.models.environment import (
    ClassificationDataset,
    EnvSpec
)
from banditlab.models.policy import get_policy_config_class
from banditlab.models.run import RunConfig
from banditlab.models.trace import (
    AlgorithmSummary,
    RegretTrace,
    Summary
)
from banditlab.policies import (
    EENetPolicy,
    LinUCBPolicy,
    KernelUCBPolicy,
    NeuralEpsilonPolicy,
    NeuralUCBPolicy,
    NeuralTSPolicy,
    OraclePolicy,
    RandomPolicy
)
from banditlab.protocols.policy import (
    BasePolicy,
    BasePolicyConfig
)
from banditlab.utils.csv_loader import load_csv_dataset

def summarize(traces: List[RegretTrace]) -> Summary:
    """
    Aggregates traces per algorithm id.

    Parameters:
    - traces (List[RegretTrace]): at least one trace; traces of one algorithm share T

    Returns:
    Mean and sample standard deviation (0 for a single seed) of the final
    regret, plus the per-round mean curve, in order of first appearance.
    """
    if not traces:
        raise ValueError("summarize needs at least one trace")
    grouped: Dict[str, List[RegretTrace]] = {}
    for trace in traces:
        grouped.setdefault(trace.algorithm, []).append(trace)

    summary = Summary()
    for algorithm, group in grouped.items():
        horizons = {trace.horizon for trace in group}
        if len(horizons) != 1:
            raise ValueError(f"Traces of '{algorithm}' have differing horizons: {sorted(horizons)}")
        curves = np.stack([trace.cumulative for trace in group])
        finals = curves[:, -1]
        summary.algorithms[algorithm] = AlgorithmSummary(
            algorithm=algorithm,
            seed_count=len(group),
            mean_final_regret=float(np.mean(finals)),
            std_final_regret=float(np.std(finals, ddof=1)) if len(group) > 1 else 0.0,
            mean_curve=np.mean(curves, axis=0)
        )
    return summary

class ExperimentEngine:
    config: ConfigParser                                    # Config file with default settings
    parallel_limit: int                                     # Seeds run concurrently
    max_arm_dim: int                                        # Cap on k*d0 for classification environments
    show_progress: bool

    def __init__(
            self,
            config: ConfigParser,
            parallel_limit: Optional[int] = None,
            show_progress: bool = True
    ) -> None:
        # Get config file with default values
        self.config = config

        if parallel_limit is None:
            parallel_limit = config.getint("general", "parallel_limit", fallback=1)
        self.parallel_limit = max(1, parallel_limit)
        self.max_arm_dim = config.getint("environment", "max_arm_dim", fallback=DEFAULT_MAX_ARM_DIM)
        self.show_progress = show_progress

        # Datasets are parsed once and shared read-only by all seeds
        self._datasets: Dict[Tuple[str, str], ClassificationDataset] = {}
        self._datasets_lock = Lock()

    def run(self, run_config: RunConfig) -> List[RegretTrace]:
        """
        Runs every seed of a run config.

        Parameters:
        - run_config (RunConfig): algorithm, environment, horizon, seeds and hyperparameters

        Returns:
        One RegretTrace per seed, in the order of run_config.seeds.
        """
        policy_config = self._get_policy_config(self.config, run_config.algorithm, run_config.hyperparameters)
        dataset = self._get_dataset(run_config.env)
        logger.info(
            f"Running '{run_config.algorithm_id}' on '{run_config.env.kind.value}' "
            f"for T={run_config.horizon} over {len(run_config.seeds)} seed(s)"
        )

        workers = min(self.parallel_limit, len(run_config.seeds))
        if workers == 1:
            return [self.run_seed(run_config, seed, policy_config=policy_config, dataset=dataset)
                    for seed in run_config.seeds]
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(self.run_seed, run_config, seed, policy_config=policy_config, dataset=dataset)
                for seed in run_config.seeds
            ]
            return [future.result() for future in futures]

    def run_seed(
            self,
            run_config: RunConfig,
            seed: int,
            policy_config: Optional[BasePolicyConfig] = None,
            dataset: Optional[ClassificationDataset] = None,
            policy: Optional[BasePolicy] = None
    ) -> RegretTrace:
        """ One online run; an injected policy replaces the one built from run_config """
        environment = get_environment(run_config.env.update(seed=seed), dataset=dataset, max_arm_dim=self.max_arm_dim)
        if policy is None:
            if policy_config is None:
                policy_config = self._get_policy_config(self.config, run_config.algorithm, run_config.hyperparameters)
            policy = self._get_policy(run_config.algorithm, dim=environment.dim, seed=seed, policy_config=policy_config)
        if policy.dim != environment.dim:
            raise ValueError(
                f"Policy '{policy.name.value}' expects dimension {policy.dim}, "
                f"the environment produces {environment.dim}"
            )

        horizon = run_config.horizon
        cumulative = np.empty(horizon)
        choices = np.empty(horizon, dtype=np.int64)
        regret = 0.0
        decision_time = 0.0
        train_time = 0.0

        start = perf_counter()
        rounds = tqdm(
            range(1, horizon + 1),
            desc=f"{run_config.algorithm_id} seed={seed}",
            leave=False,
            disable=not self.show_progress
        )
        for t in rounds:
            round = environment.next_round(t)

            tic = perf_counter()
            index = policy.select(round)
            decision_time += perf_counter() - tic

            _, reward = environment.realize(round, index)
            regret += pseudo_regret(round, index)

            tic = perf_counter()
            policy.update(round.arms[index], reward)
            train_time += perf_counter() - tic

            cumulative[t - 1] = regret
            choices[t - 1] = index
        wall_time = perf_counter() - start

        direction_counts = getattr(policy, "direction_counts", None)
        if direction_counts is not None:
            direction_counts = dict(direction_counts)
            logger.debug(f"'{run_config.algorithm_id}' seed={seed} exploration directions: {direction_counts}")
        logger.info(
            f"'{run_config.algorithm_id}' seed={seed}: final regret {regret:.4f} "
            f"in {wall_time * 1000:.0f} ms"
        )
        return RegretTrace(
            algorithm=run_config.algorithm_id,
            seed=seed,
            cumulative=cumulative,
            wall_time_ms=wall_time * 1000,
            decision_time_ms=decision_time * 1000,
            train_time_ms=train_time * 1000,
            choices=choices,
            direction_counts=direction_counts
        )

    @staticmethod
    def summarize(traces: List[RegretTrace]) -> Summary:
        return summarize(traces)

    def _get_dataset(self, env: EnvSpec) -> Optional[ClassificationDataset]:
        if env.kind not in DATASET_KINDS:
            return None
        key = (env.dataset_path, env.label_column)
        with self._datasets_lock:
            if key not in self._datasets:
                self._datasets[key] = load_csv_dataset(env.dataset_path, env.label_column)
                logger.info(f"Loaded dataset '{env.dataset_path}' ({self._datasets[key].n_rows} rows)")
            return self._datasets[key]

    @staticmethod
    def _get_policy_config(
            config_parser: ConfigParser,
            algorithm: AlgorithmType,
            hyperparameters: Optional[Dict[str, Any]] = None
    ) -> BasePolicyConfig:
        """ Dataclass defaults < config.ini section of the algorithm < hyperparameters """
        config_class = get_policy_config_class(algorithm)
        policy_config = config_class()
        if config_parser.has_section(algorithm.value):
            policy_config = policy_config.with_parameters(dict(config_parser.items(algorithm.value)))
        if hyperparameters:
            policy_config = policy_config.with_parameters(hyperparameters)
        return policy_config

    @staticmethod
    def _get_policy(
            algorithm: AlgorithmType,
            dim: int,
            seed: int,
            policy_config: Optional[BasePolicyConfig] = None
    ) -> BasePolicy:
        """ Get Policy """
        class_args = {
            "dim": dim,
            "seed": seed,
            "config": policy_config,
        }

        match algorithm:
            case AlgorithmType.EENET:
                return EENetPolicy(**class_args)
            case AlgorithmType.LINUCB:
                return LinUCBPolicy(**class_args)
            case AlgorithmType.KERNELUCB:
                return KernelUCBPolicy(**class_args)
            case AlgorithmType.NEURALEPSILON:
                return NeuralEpsilonPolicy(**class_args)
            case AlgorithmType.NEURALUCB:
                return NeuralUCBPolicy(**class_args)
            case AlgorithmType.NEURALTS:
                return NeuralTSPolicy(**class_args)
            case AlgorithmType.ORACLE:
                return OraclePolicy(**class_args)
            case AlgorithmType.RANDOM:
                return RandomPolicy(**class_args)
            case _:
                raise ValueError(f"Unknown algorithm '{algorithm}'. Supported: {[e.value for e in AlgorithmType]}")
