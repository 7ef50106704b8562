from .csv_loader import (
    DatasetError,
    load_csv_dataset
)
from .config_file import (
    read_run_config_file,
    parse_assignment
)
from .outputs import (
    write_outputs,
    write_trace,
    read_trace,
    write_grid_result
)
from .seeding import (
    Stream,
    derive_seed,
    keyed_rng
)

__all__ = [
    "DatasetError",
    "load_csv_dataset",
    "read_run_config_file",
    "parse_assignment",
    "write_outputs",
    "write_trace",
    "read_trace",
    "write_grid_result",
    "Stream",
    "derive_seed",
    "keyed_rng",
]
