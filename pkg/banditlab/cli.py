"""
Command-line interface: bandit-lab run | grid | compare

Settings are merged as: run-config file (--config) < explicit options < --set key=value.
Any failure, usage errors included, prints one line `error: <ExceptionType>: <message>` to stderr, removes the
files the command had written and exits with status 1.
"""
import shutil
from configparser import ConfigParser
from pathlib import Path
from typing import (
    Any,
    Callable,
    Dict,
    List,
    Optional,
    Set,
    Tuple
)

import logging
logger = logging.getLogger(__name__)

import click

from banditlab.lab import (
    ABLATION_ALGORITHMS,
    CONFIG_PATH,
    ENV_SETTINGS,
    BanditLab
)
from banditlab.models.enums import SelectionMetric
from banditlab.models.trace import Summary
from banditlab.utils.config_file import (
    parse_assignment,
    read_run_config_file
)

# Keys of a run-config file that are neither environment settings nor hyperparameters
RUN_SETTINGS = ("algo", "algos", "env", "rounds", "seeds", "out", "metric")

def _collect_settings(
        config_file: Optional[str],
        options: Dict[str, Any],
        assignments: Tuple[str, ...]
) -> Dict[str, Any]:
    settings: Dict[str, Any] = read_run_config_file(config_file) if config_file else {}
    settings.update({key: value for key, value in options.items() if value is not None})
    settings.update(parse_assignment(assignment) for assignment in assignments)
    return settings

def _split_settings(settings: Dict[str, Any]) -> Tuple[Dict[str, Any], Dict[str, Any], Dict[str, Any]]:
    """ (run settings, environment settings, hyperparameters) """
    run = {k: v for k, v in settings.items() if k in RUN_SETTINGS}
    env = {k: v for k, v in settings.items() if k in ENV_SETTINGS}
    hyperparameters = {k: v for k, v in settings.items() if k not in RUN_SETTINGS and k not in ENV_SETTINGS}
    return run, env, hyperparameters

def _require(run: Dict[str, Any], key: str, option: str) -> str:
    if not run.get(key):
        raise ValueError(f"Missing {option} (or '{key}' in the config file)")
    return str(run[key])

def _snapshot(out: Path) -> Set[Path]:
    return set(out.rglob("*")) if out.exists() else set()

def _remove_new_outputs(out: Path, before: Set[Path], out_existed: bool) -> None:
    if not out_existed:
        shutil.rmtree(out, ignore_errors=True)
        return
    for path in sorted(_snapshot(out) - before, reverse=True):
        if path.is_dir():
            shutil.rmtree(path, ignore_errors=True)
        else:
            path.unlink(missing_ok=True)

def _guarded(out: Optional[Path], command: Callable[[], None]) -> None:
    out_existed = out.exists() if out is not None else True
    before = _snapshot(out) if out is not None else set()
    try:
        command()
    except Exception as e:
        if out is not None:
            _remove_new_outputs(out, before, out_existed)
        message = " ".join(str(e).split())
        click.echo(f"error: {type(e).__name__}: {message}", err=True)
        raise SystemExit(1)

def _echo_summary(summary: Summary) -> None:
    click.echo("algorithm,seed_count,mean_final_regret,std_final_regret")
    for s in summary.algorithms.values():
        click.echo(f"{s.algorithm},{s.seed_count},{s.mean_final_regret:.6f},{s.std_final_regret:.6f}")

def _make_lab(ctx: click.Context) -> BanditLab:
    return BanditLab(**ctx.obj)

def _common_options(function: Callable) -> Callable:
    options = [
        click.option("--env", default=None, help="synthetic-quadratic | synthetic-cosine | synthetic-linear | csv:PATH | pool:PATH"),
        click.option("--rounds", type=int, default=None, help="Horizon T."),
        click.option("--seeds", default=None, help="Comma separated seeds, e.g. 0,1,2."),
        click.option("--out", default=None, type=click.Path(file_okay=False), help="Output directory."),
        click.option("--config", "config_file", default=None, type=click.Path(dir_okay=False),
                     help="Flat key = value run-config file."),
        click.option("--set", "assignments", multiple=True, metavar="KEY=VALUE",
                     help="Override a setting or hyperparameter, repeatable."),
    ]
    for option in reversed(options):
        function = option(function)
    return function

@click.group()
@click.option("--verbosity", "-v", type=click.IntRange(-1, 2), default=None,
              help="-1 errors only, 0 warnings, 1 info, 2 debug.")
@click.option("--parallel", type=click.IntRange(min=1), default=None, help="Seeds run concurrently.")
@click.option("--no-progress", is_flag=True, help="Hide the progress bars.")
@click.option("--log-path", default=None, help="Log file, relative paths live next to config.ini; empty disables file logging.")
@click.pass_context
def main(
        ctx: click.Context,
        verbosity: Optional[int],
        parallel: Optional[int],
        no_progress: bool,
        log_path: Optional[str]
) -> None:
    """ Contextual bandit experiments: EE-Net and its baselines. """
    ctx.obj = {
        "verbosity": verbosity,
        "parallel_limit": parallel,
        "show_progress": not no_progress,
        "log_path": log_path
    }

@main.command()
@click.option("--algo", default=None, help="eenet | linucb | kernelucb | neural-epsilon | neuralucb | neuralts | oracle | random | eenet-<variant>")
@_common_options
@click.pass_context
def run(ctx: click.Context, algo, env, rounds, seeds, out, config_file, assignments) -> None:
    """ Run one algorithm over all seeds and write traces, summary and curves. """
    def command():
        lab = _make_lab(ctx)
        settings = _collect_settings(config_file, {"algo": algo, "env": env, "rounds": rounds,
                                                   "seeds": seeds, "out": out}, assignments)
        run_settings, env_settings, hyperparameters = _split_settings(settings)
        run_config = lab.make_run_config(
            _require(run_settings, "algo", "--algo"),
            env=run_settings.get("env"),
            rounds=int(run_settings["rounds"]) if "rounds" in run_settings else None,
            seeds=run_settings.get("seeds"),
            hyperparameters=hyperparameters,
            env_settings=env_settings,
            output_path=str(target)
        )
        _, summary = lab.run(run_config)
        _echo_summary(summary)

    target = _output_dir(ctx, out, config_file, assignments)
    _guarded(target, command)

@main.command()
@click.option("--algos", default=None, help="Comma separated algorithms.")
@click.option("--ablation", is_flag=True, help=f"Compare the EE-Net label variants: {','.join(ABLATION_ALGORITHMS)}.")
@_common_options
@click.pass_context
def compare(ctx: click.Context, algos, ablation, env, rounds, seeds, out, config_file, assignments) -> None:
    """ Run several algorithms on the same rounds and write curves.csv with one column per algorithm. """
    def command():
        lab = _make_lab(ctx)
        settings = _collect_settings(config_file, {"algos": algos, "env": env, "rounds": rounds,
                                                   "seeds": seeds, "out": out}, assignments)
        run_settings, env_settings, hyperparameters = _split_settings(settings)
        if ablation:
            tokens = list(ABLATION_ALGORITHMS)
        else:
            tokens = [t.strip() for t in _require(run_settings, "algos", "--algos").split(",") if t.strip()]
        run_configs = lab.make_run_configs(
            tokens,
            hyperparameters=hyperparameters,
            env=run_settings.get("env"),
            rounds=int(run_settings["rounds"]) if "rounds" in run_settings else None,
            seeds=run_settings.get("seeds"),
            env_settings=env_settings
        )
        _, summary = lab.compare(run_configs, output_path=str(target))
        _echo_summary(summary)

    target = _output_dir(ctx, out, config_file, assignments)
    _guarded(target, command)

@main.command()
@click.option("--algo", default=None, help="Algorithm to tune.")
@click.option("--grid", "grid_specs", multiple=True, metavar="KEY=V1,V2",
              help="Grid values of one hyperparameter, repeatable; a bare KEY uses the [grids] default.")
@click.option("--metric", type=click.Choice([e.value for e in SelectionMetric]), default=None,
              help="Selection metric, default final.")
@_common_options
@click.pass_context
def grid(ctx: click.Context, algo, grid_specs, metric, env, rounds, seeds, out, config_file, assignments) -> None:
    """ Exhaustive grid search; writes grid.csv and prints the best setting. """
    def command():
        lab = _make_lab(ctx)
        settings = _collect_settings(config_file, {"algo": algo, "env": env, "rounds": rounds, "seeds": seeds,
                                                   "out": out, "metric": metric}, assignments)
        run_settings, env_settings, hyperparameters = _split_settings(settings)
        if not grid_specs:
            raise ValueError("Missing --grid")
        grid_values: Dict[str, List[str]] = {}
        for spec in grid_specs:
            if "=" in spec:
                key, values = parse_assignment(spec)
                grid_values[key] = [v.strip() for v in values.split(",") if v.strip()]
            else:
                grid_values[spec.strip()] = lab.grid_values(spec.strip())

        base = lab.make_run_config(
            _require(run_settings, "algo", "--algo"),
            env=run_settings.get("env"),
            rounds=int(run_settings["rounds"]) if "rounds" in run_settings else None,
            seeds=run_settings.get("seeds"),
            hyperparameters=hyperparameters,
            env_settings=env_settings
        )
        result = lab.grid(base, grid_values, run_settings.get("metric", SelectionMetric.FINAL.value),
                          output_path=str(target))
        for key, value in result.best_parameters.items():
            click.echo(f"{key}={value}")
        click.echo(f"{result.selection_metric.value}={result.best.metric_value:.6f}")
        click.echo(f"runs={result.run_count}")

    target = _output_dir(ctx, out, config_file, assignments)
    _guarded(target, command)

def _output_dir(
        ctx: click.Context,
        out: Optional[str],
        config_file: Optional[str],
        assignments: Tuple[str, ...]
) -> Optional[Path]:
    """ The output directory is resolved up front so a failure can clean it up """
    try:
        settings = _collect_settings(config_file, {"out": out}, assignments)
    except Exception:
        # Reported by the command itself
        return Path(out) if out else None
    if settings.get("out"):
        return Path(settings["out"])
    defaults = ConfigParser(interpolation=None)
    defaults.read(CONFIG_PATH)
    return Path(defaults.get("general", "output_dir", fallback="results"))

def console_main(args: Optional[List[str]] = None) -> None:
    """ Entry point of the bandit-lab script; usage errors are reported on one line like every other failure """
    try:
        exit_code = main.main(args=args, prog_name="bandit-lab", standalone_mode=False)
    except click.ClickException as e:
        message = " ".join(e.format_message().split())
        click.echo(f"error: {type(e).__name__}: {message}", err=True)
        raise SystemExit(1)
    except click.Abort:
        click.echo("error: Abort: interrupted", err=True)
        raise SystemExit(1)
    if isinstance(exit_code, int) and exit_code:
        raise SystemExit(exit_code)

if __name__ == "__main__":
    console_main()
