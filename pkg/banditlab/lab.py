"""
Orchestration class for the bandit experiments.
- user-facing wrapper
- turns command-line style tokens (algorithm names, environment names, key=value settings) into RunConfigs
"""
from configparser import ConfigParser
from pathlib import Path
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Tuple,
    Union
)

import logging
logger = logging.getLogger(__name__)

from banditlab.experiment_engine import (
    ExperimentEngine,
    summarize
)
from banditlab.search_engine import GridSearchEngine
from banditlab.models.enums import (
    AlgorithmType,
    EnvKind,
    LabelVariant,
    NoiseType,
    SelectionMetric,
    DATASET_KINDS,
    DATASET_PREFIXES
)
from banditlab.models.environment import EnvSpec
from banditlab.models.policy import get_policy_config_class
from banditlab.models.run import RunConfig
from banditlab.models.trace import (
    GridResult,
    RegretTrace,
    Summary
)
from banditlab.utils.outputs import (
    write_grid_result,
    write_outputs
)

RESOURCES_DIR = Path(__file__).parent.parent / "resources"
CONFIG_PATH = RESOURCES_DIR / "config.ini"

# Settings of a run-config file or --set that describe the environment rather than the policy
ENV_SETTINGS = {
    "dim": "dim",
    "arms": "n_arms",
    "noise": "noise",
    "noise_sigma": "noise_sigma",
    "label_column": "label_column",
    "normalize": "normalize",
}

# Labels of the EE-Net runs with a fixed exploration label, used by the ablation
ABLATION_ALGORITHMS = [f"{AlgorithmType.EENET.value}-{variant.value}" for variant in LabelVariant]

def parse_algorithm(token: str) -> Tuple[AlgorithmType, Dict[str, str], Optional[str]]:
    """
    Reads an algorithm token.

    Parameters:
    - token (str): an algorithm name or 'eenet-<variant>'

    Returns:
    (algorithm, implied hyperparameters, label); the label is None for plain names.
    """
    token = token.strip()
    try:
        return AlgorithmType(token), {}, None
    except ValueError:
        pass
    prefix, _, variant = token.rpartition("-")
    if prefix == AlgorithmType.EENET.value and variant in [v.value for v in LabelVariant]:
        return AlgorithmType.EENET, {"variant": variant}, token
    raise ValueError(
        f"Invalid algorithm: '{token}'. Supported: {[e.value for e in AlgorithmType] + ABLATION_ALGORITHMS}"
    )

def parse_environment(token: str) -> Dict[str, Any]:
    """ 'synthetic-cosine' -> {kind}; 'csv:PATH' / 'pool:PATH' -> {kind, dataset_path} """
    token = token.strip()
    prefix, sep, path = token.partition(":")
    if sep:
        if prefix not in DATASET_PREFIXES:
            raise ValueError(f"Invalid dataset prefix: '{prefix}'. Supported: {sorted(DATASET_PREFIXES)}")
        if not path:
            raise ValueError(f"Missing dataset path in '{token}'")
        return {"kind": DATASET_PREFIXES[prefix], "dataset_path": path}
    try:
        kind = EnvKind(token)
    except ValueError:
        raise ValueError(
            f"Invalid environment: '{token}'. Supported: "
            f"{[e.value for e in EnvKind if e not in DATASET_KINDS] + [p + ':PATH' for p in DATASET_PREFIXES]}"
        )
    if kind in DATASET_KINDS:
        raise ValueError(f"Environment '{token}' needs a dataset, use '{kind.value}' as '<prefix>:PATH'")
    return {"kind": kind}

def parse_seeds(text: Union[str, List[int]]) -> List[int]:
    if isinstance(text, list):
        return [int(seed) for seed in text]
    try:
        return [int(seed) for seed in text.split(",") if seed.strip()]
    except ValueError:
        raise ValueError(f"Seeds must be a comma separated list of integers, got '{text}'")

class BanditLab:
    config: ConfigParser                        # Config file with default settings
    experiment_engine: ExperimentEngine
    search_engine: GridSearchEngine

    def __init__(
            self,
            config_path: Optional[Union[str, Path]] = None,
            verbosity: Optional[int] = None,
            parallel_limit: Optional[int] = None,
            show_progress: bool = True,
            log_path: Optional[str] = None
    ) -> None:
        # Load config file with default values, an optional second INI file overrides it
        self.config = ConfigParser(interpolation=None)
        self.config.read(CONFIG_PATH)
        if config_path is not None:
            if not Path(config_path).is_file():
                raise FileNotFoundError(f"Config file '{config_path}' does not exist")
            self.config.read(config_path)

        # Configure the verbosity
        if verbosity is None:
            verbosity = self.config.getint("general", "verbosity", fallback=1)
        self._set_global_logging_level(verbosity, log_path)
        logger.info("BanditLab initialized with verbosity %s", verbosity)

        # Load the engines
        self.experiment_engine = ExperimentEngine(
            config=self.config,
            parallel_limit=parallel_limit,
            show_progress=show_progress
        )
        self.search_engine = GridSearchEngine(self.experiment_engine)

    def make_run_config(
            self,
            algorithm: str,
            env: Optional[Union[str, EnvSpec]] = None,
            rounds: Optional[int] = None,
            seeds: Optional[Union[str, List[int]]] = None,
            hyperparameters: Optional[Dict[str, Any]] = None,
            env_settings: Optional[Dict[str, Any]] = None,
            output_path: Optional[str] = None
    ) -> RunConfig:
        """
        Builds a validated RunConfig from tokens, filling gaps from config.ini.

        Parameters:
        - algorithm (str): algorithm name or 'eenet-<variant>'
        - env (str | EnvSpec): environment name, 'csv:PATH', 'pool:PATH' or a ready EnvSpec
        - rounds (int): horizon T
        - seeds (str | List[int]): '0,1,2' or a list
        - hyperparameters (Dict[str, Any]): policy settings, override config.ini; an eenet-<variant> label keeps its variant
        - env_settings (Dict[str, Any]): dim, arms, noise, noise_sigma, label_column, normalize
        - output_path (str): result directory

        Returns:
        The RunConfig; unknown hyperparameter keys raise ValueError.
        """
        algorithm_type, implied, label = parse_algorithm(algorithm)

        if isinstance(env, EnvSpec):
            env_spec = env
        else:
            env_fields = parse_environment(env or EnvKind.QUADRATIC.value)
            env_fields.setdefault("dim", self.config.getint("general", "default_dim", fallback=10))
            env_fields["n_arms"] = self.config.getint("general", "default_arms", fallback=10)
            env_fields["noise_sigma"] = self.config.getfloat("environment", "noise_sigma", fallback=0.05)
            # Class labels are already 0/1 rewards
            if env_fields["kind"] in DATASET_KINDS:
                env_fields["noise"] = NoiseType.BERNOULLI
            for key, value in (env_settings or {}).items():
                if key not in ENV_SETTINGS:
                    raise ValueError(f"Unknown environment setting '{key}'. Supported: {sorted(ENV_SETTINGS)}")
                env_fields[ENV_SETTINGS[key]] = value
            env_spec = EnvSpec(**env_fields)

        if rounds is None:
            rounds = self.config.getint("general", "default_rounds", fallback=5000)
        if seeds is None:
            seeds = self.config.get("general", "default_seeds", fallback="0")

        return RunConfig(
            algorithm=algorithm_type,
            label=label,
            env=env_spec,
            horizon=rounds,
            seeds=parse_seeds(seeds),
            hyperparameters={**(hyperparameters or {}), **implied},
            output_path=output_path
        )

    def make_run_configs(
            self,
            algorithms: List[str],
            hyperparameters: Optional[Dict[str, Any]] = None,
            **kwargs: Any
    ) -> List[RunConfig]:
        """ One RunConfig per algorithm; each hyperparameter goes to the algorithms that know it """
        hyperparameters = hyperparameters or {}
        supported = {
            token: set(get_policy_config_class(parse_algorithm(token)[0]).hyperparameter_keys())
            for token in algorithms
        }
        orphans = sorted(key for key in hyperparameters if not any(key in keys for keys in supported.values()))
        if orphans:
            raise ValueError(f"Hyperparameter(s) {orphans} are not supported by any of {algorithms}")
        return [
            self.make_run_config(
                token,
                hyperparameters={k: v for k, v in hyperparameters.items() if k in supported[token]},
                **kwargs
            )
            for token in algorithms
        ]

    def run(self, run_config: RunConfig) -> Tuple[List[RegretTrace], Summary]:
        traces = self.experiment_engine.run(run_config)
        summary = summarize(traces)
        if run_config.output_path:
            write_outputs(traces, summary, run_config.output_path)
        return traces, summary

    def compare(
            self,
            run_configs: List[RunConfig],
            output_path: Optional[str] = None
    ) -> Tuple[List[RegretTrace], Summary]:
        """ Runs several algorithms on one environment and writes them side by side """
        ids = [run_config.algorithm_id for run_config in run_configs]
        if len(set(ids)) != len(ids):
            raise ValueError(f"Compared algorithms must be distinct, got {ids}")
        if len({run_config.horizon for run_config in run_configs}) != 1:
            raise ValueError("Compared runs must share the horizon")

        traces: List[RegretTrace] = []
        for run_config in run_configs:
            traces.extend(self.experiment_engine.run(run_config))
        summary = summarize(traces)
        if output_path:
            write_outputs(traces, summary, output_path)
        return traces, summary

    def grid(
            self,
            base: RunConfig,
            grid: Dict[str, List[Any]],
            selection_metric: Union[str, SelectionMetric] = SelectionMetric.FINAL,
            output_path: Optional[str] = None
    ) -> GridResult:
        try:
            selection_metric = SelectionMetric(selection_metric)
        except ValueError:
            raise ValueError(
                f"Invalid selection metric: '{selection_metric}'. Supported: {[e.value for e in SelectionMetric]}"
            )
        result = self.search_engine.grid_search(base, grid, selection_metric)
        if output_path:
            write_grid_result(result, output_path)
        return result

    def grid_values(self, key: str) -> List[str]:
        """ The default grid of a hyperparameter from the [grids] section of config.ini """
        if not self.config.has_option("grids", key):
            supported = self.config.options("grids") if self.config.has_section("grids") else []
            raise ValueError(f"No default grid for '{key}'. Supported: {supported}")
        return [value.strip() for value in self.config.get("grids", key).split(",") if value.strip()]

    def _set_global_logging_level(self, verbosity: Optional[int] = 1, log_path: Optional[str] = None):
        verbosity_map = {
           -1: logging.ERROR,
            0: logging.WARNING,
            1: logging.INFO,
            2: logging.DEBUG,
        }
        level = verbosity_map.get(verbosity, logging.INFO)

        if log_path is None:
            log_path = self.config.get("general", "log_path", fallback="")
        # Relative log paths live next to config.ini
        log_file = Path(log_path) if Path(log_path).is_absolute() else RESOURCES_DIR / log_path

        root_logger = logging.getLogger()
        root_logger.setLevel(level)

        # Remove existing handlers to avoid duplicates
        while root_logger.handlers:
            root_logger.removeHandler(root_logger.handlers[0])

        formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(message)s')

        # File handler
        file_error = None
        if log_path:
            try:
                log_file.parent.mkdir(parents=True, exist_ok=True)
                file_handler = logging.FileHandler(log_file)
                file_handler.setLevel(level)
                file_handler.setFormatter(formatter)
                root_logger.addHandler(file_handler)
            except OSError as e:
                file_error = e

        # Console handler
        console_handler = logging.StreamHandler()
        console_handler.setLevel(level)
        console_handler.setFormatter(formatter)
        root_logger.addHandler(console_handler)

        if file_error is not None:
            logger.warning(f"Logging to console only, cannot open '{log_file}': {file_error}")
