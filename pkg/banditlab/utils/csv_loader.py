import csv
from pathlib import Path
from typing import (
    List,
    Union
)

import logging
logger = logging.getLogger(__name__)

import numpy as np

from banditlab.models.environment import ClassificationDataset

class DatasetError(ValueError):
    """ Raised for unreadable or malformed dataset files """

def load_csv_dataset(path: Union[str, Path], label_column: str = "label") -> ClassificationDataset:
    """
    Reads a classification dataset from a CSV file.

    Parameters:
    - path (str | Path): comma-separated UTF-8 file, first line is the header
    - label_column (str): name of the integer label column, all other columns are features

    Returns:
    The rows in file order, features not yet normalized, k = max label + 1.
    """
    path = Path(path)
    features: List[List[float]] = []
    labels: List[int] = []

    try:
        # utf-8-sig drops a leading byte order mark
        with open(path, "r", encoding="utf-8-sig", newline="") as file:
            reader = csv.reader(file)
            header = next(reader, None)
            if header is None:
                raise DatasetError(f"({path}) no data rows")
            header = [name.strip() for name in header]
            if label_column not in header:
                raise DatasetError(f"({path}) unknown label column '{label_column}'. Columns: {header}")
            label_idx = header.index(label_column)

            for line_number, row in enumerate(reader, start=2):
                if not row or all(not cell.strip() for cell in row):
                    continue
                if len(row) != len(header):
                    raise DatasetError(
                        f"({path}) line {line_number}: expected {len(header)} columns, got {len(row)}"
                    )
                try:
                    label = int(row[label_idx])
                except ValueError:
                    raise DatasetError(f"({path}) line {line_number}: label '{row[label_idx]}' is not an integer")
                values = []
                for col_idx, cell in enumerate(row):
                    if col_idx == label_idx:
                        continue
                    try:
                        values.append(float(cell))
                    except ValueError:
                        raise DatasetError(
                            f"({path}) line {line_number}: non-numeric feature '{cell}' in column '{header[col_idx]}'"
                        )
                features.append(values)
                labels.append(label)
    except UnicodeDecodeError as e:
        raise DatasetError(f"({path}) not valid UTF-8: {e}")

    if not features:
        raise DatasetError(f"({path}) no data rows")
    if min(labels) < 0:
        raise DatasetError(f"({path}) labels must be non-negative")

    labels_array = np.asarray(labels, dtype=np.int64)
    logger.info(f"({path}) Loaded {len(labels)} rows with {len(features[0])} features")
    try:
        return ClassificationDataset(
            features=np.asarray(features, dtype=np.float64),
            labels=labels_array,
            k=int(labels_array.max()) + 1
        )
    except ValueError as e:
        raise DatasetError(f"({path}) {e}")
