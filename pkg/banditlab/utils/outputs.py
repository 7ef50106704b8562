"""
Result files of a run.
- trace_<algo>_<seed>.csv: round,cumulative_regret
- summary.csv: algorithm,seed_count,mean_final_regret,std_final_regret
- curves.csv: round,<algo>_mean,...
- timing.csv: algorithm,seed,wall_time_ms,decision_time_ms,train_time_ms
- plot_curves.py: matplotlib script drawing curves.csv
- grid.csv: one row per grid point (grid search only)
Floats are written with repr (17 significant digits at most), so reading back is lossless.
"""
import csv
from pathlib import Path
from typing import (
    Any,
    Dict,
    List,
    Sequence,
    Union
)

import logging
logger = logging.getLogger(__name__)

import numpy as np

from banditlab.models.trace import (
    GridResult,
    RegretTrace,
    Summary
)

TRACE_HEADER = ["round", "cumulative_regret"]
SUMMARY_HEADER = ["algorithm", "seed_count", "mean_final_regret", "std_final_regret"]
TIMING_HEADER = ["algorithm", "seed", "wall_time_ms", "decision_time_ms", "train_time_ms"]

PLOT_SCRIPT = '''"""Plots the mean cumulative regret curves of curves.csv next to this script."""
import csv
from pathlib import Path

import matplotlib.pyplot as plt

here = Path(__file__).parent
with open(here / "curves.csv", newline="") as f:
    rows = list(csv.reader(f))

header, body = rows[0], rows[1:]
rounds = [int(row[0]) for row in body]
for column, name in enumerate(header[1:], start=1):
    plt.plot(rounds, [float(row[column]) for row in body], label=name[:-len("_mean")])

plt.xlabel("round")
plt.ylabel("cumulative regret")
plt.legend()
plt.tight_layout()
plt.savefig(here / "curves.png", dpi=150)
'''

def _format(value: float) -> str:
    return repr(float(value))

def _write_csv(path: Path, header: Sequence[str], rows: List[List[Any]]) -> Path:
    with path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path

def trace_filename(trace: RegretTrace) -> str:
    return f"trace_{trace.algorithm}_{trace.seed}.csv"

def write_trace(trace: RegretTrace, path: Union[str, Path]) -> Path:
    rows = [[t, _format(value)] for t, value in enumerate(trace.cumulative, start=1)]
    return _write_csv(Path(path), TRACE_HEADER, rows)

def read_trace(path: Union[str, Path]) -> np.ndarray:
    """
    Reads the cumulative regret vector back from a trace CSV.

    Parameters:
    - path (str | Path): a file written by write_trace

    Returns:
    The cumulative regret per round, bit-identical to what was written.
    """
    path = Path(path)
    with path.open(encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != TRACE_HEADER:
            raise ValueError(f"'{path}' is not a trace file, header is {header}")
        values = []
        for line_number, row in enumerate(reader, start=2):
            if len(row) != 2 or int(row[0]) != line_number - 1:
                raise ValueError(f"'{path}' line {line_number}: malformed row {row}")
            values.append(float(row[1]))
    return np.array(values, dtype=np.float64)

def write_outputs(
        traces: List[RegretTrace],
        summary: Summary,
        output_path: Union[str, Path]
) -> List[Path]:
    """
    Writes every result file into output_path (created when missing).

    Parameters:
    - traces (List[RegretTrace]): one trace per (algorithm, seed)
    - summary (Summary): the aggregate of the same traces
    - output_path (str | Path): target directory

    Returns:
    The written files, in writing order.
    """
    out = Path(output_path)
    out.mkdir(parents=True, exist_ok=True)
    written: List[Path] = []

    for trace in traces:
        written.append(write_trace(trace, out / trace_filename(trace)))

    summaries = list(summary.algorithms.values())
    written.append(_write_csv(out / "summary.csv", SUMMARY_HEADER, [
        [s.algorithm, s.seed_count, _format(s.mean_final_regret), _format(s.std_final_regret)]
        for s in summaries
    ]))

    horizon = summary.horizon
    written.append(_write_csv(
        out / "curves.csv",
        ["round"] + [f"{s.algorithm}_mean" for s in summaries],
        [[t + 1] + [_format(s.mean_curve[t]) for s in summaries] for t in range(horizon)]
    ))

    written.append(_write_csv(out / "timing.csv", TIMING_HEADER, [
        [trace.algorithm, trace.seed, _format(trace.wall_time_ms),
         _format(trace.decision_time_ms), _format(trace.train_time_ms)]
        for trace in traces
    ]))

    script = out / "plot_curves.py"
    script.write_text(PLOT_SCRIPT, encoding="utf-8", newline="\n")
    written.append(script)

    logger.info(f"Wrote {len(written)} files to '{out}'")
    return written

def read_csv_rows(path: Union[str, Path]) -> List[Dict[str, str]]:
    """ Rows of any result CSV as dicts keyed by the header """
    with Path(path).open(encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))

def write_grid_result(result: GridResult, output_path: Union[str, Path]) -> Path:
    """ grid.csv: one row per evaluated point, parameter columns first """
    out = Path(output_path)
    out.mkdir(parents=True, exist_ok=True)
    keys = sorted(result.best_parameters)
    header = keys + ["mean_final_regret", "std_final_regret", result.selection_metric.value]
    rows = [
        [point.parameters[key] for key in keys]
        + [_format(point.mean_final_regret), _format(point.std_final_regret), _format(point.metric_value)]
        for point in result.points
    ]
    path = _write_csv(out / "grid.csv", header, rows)
    logger.info(f"Wrote grid results to '{path}'")
    return path
