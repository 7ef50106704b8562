import numpy as np
import pytest

from banditlab.experiment_engine import summarize
from banditlab.models.trace import RegretTrace
from banditlab.utils.outputs import (
    read_csv_rows,
    read_trace,
    write_outputs,
    write_trace
)

def trace(values, algorithm="eenet", seed=0) -> RegretTrace:
    return RegretTrace(algorithm=algorithm, seed=seed, cumulative=np.asarray(values, dtype=np.float64),
                       wall_time_ms=1.5, decision_time_ms=0.5, train_time_ms=1.0)

class TestTraceFiles:
    def test_three_rounds(self, tmp_path):
        path = write_trace(trace([0.1, 0.1, 0.6]), tmp_path / "trace.csv")
        assert path.read_text(encoding="utf-8") == "round,cumulative_regret\n1,0.1\n2,0.1\n3,0.6\n"

    def test_read_back_is_exact(self, tmp_path, rng):
        values = np.cumsum(rng.random(200))
        path = write_trace(trace(values), tmp_path / "trace.csv")
        assert np.array_equal(read_trace(path), values)

    def test_rejects_other_files(self, tmp_path):
        path = tmp_path / "other.csv"
        path.write_text("a,b\n1,2\n", encoding="utf-8")
        with pytest.raises(ValueError):
            read_trace(path)

    def test_invalid_increments(self):
        with pytest.raises(ValueError):
            trace([0.5, 0.2])
        with pytest.raises(ValueError):
            trace([1.5])

class TestWriteOutputs:
    def test_files_of_two_algorithms(self, tmp_path):
        traces = [
            trace([0.0, 0.5, 1.0], "eenet", 0),
            trace([0.0, 0.5, 0.5], "eenet", 1),
            trace([1.0, 2.0, 3.0], "random", 0),
            trace([0.0, 1.0, 2.0], "random", 1),
        ]
        out = tmp_path / "results"
        written = write_outputs(traces, summarize(traces), out)
        names = {path.name for path in written}
        assert {"trace_eenet_0.csv", "trace_random_1.csv", "summary.csv", "curves.csv",
                "timing.csv", "plot_curves.py"} <= names

        curves = read_csv_rows(out / "curves.csv")
        assert list(curves[0]) == ["round", "eenet_mean", "random_mean"]
        assert [row["round"] for row in curves] == ["1", "2", "3"]
        assert float(curves[2]["eenet_mean"]) == 0.75

        summary = read_csv_rows(out / "summary.csv")
        assert [row["algorithm"] for row in summary] == ["eenet", "random"]
        assert float(summary[1]["mean_final_regret"]) == 2.5
        assert summary[0]["seed_count"] == "2"

        timing = read_csv_rows(out / "timing.csv")
        assert len(timing) == 4
        assert float(timing[0]["wall_time_ms"]) == 1.5

        assert "curves.csv" in (out / "plot_curves.py").read_text(encoding="utf-8")

    def test_unwritable_target(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("", encoding="utf-8")
        traces = [trace([0.0])]
        with pytest.raises(OSError):
            write_outputs(traces, summarize(traces), blocker)
