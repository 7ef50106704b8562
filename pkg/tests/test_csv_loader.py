import numpy as np
import pytest

from banditlab.utils.csv_loader import (
    DatasetError,
    load_csv_dataset
)

class TestLoadCsvDataset:
    def test_three_rows(self, write_csv):
        path = write_csv("small.csv", ["a", "b", "label"], [[0.6, 0.8, 0], [1, 0, 2], [0, 1, 1]])
        dataset = load_csv_dataset(path)
        assert dataset.n_rows == 3
        assert dataset.feature_dim == 2
        assert dataset.k == 3
        np.testing.assert_array_equal(dataset.labels, [0, 2, 1])
        np.testing.assert_array_equal(dataset.features[0], [0.6, 0.8])

    def test_label_column_anywhere(self, write_csv):
        path = write_csv("first.csv", ["y", "a"], [[1, 0.5], [0, 2.0]])
        dataset = load_csv_dataset(path, label_column="y")
        np.testing.assert_array_equal(dataset.features[:, 0], [0.5, 2.0])
        assert dataset.k == 2

    def test_blank_lines_are_skipped(self, tmp_path):
        path = tmp_path / "blank.csv"
        path.write_text("a,label\n1.0,0\n\n2.0,1\n", encoding="utf-8")
        assert load_csv_dataset(path).n_rows == 2

    def test_byte_order_mark(self, tmp_path):
        path = tmp_path / "bom.csv"
        path.write_bytes(b"\xef\xbb\xbflabel,a\n1,0.5\n0,2.0\n")
        dataset = load_csv_dataset(path)
        assert dataset.n_rows == 2
        np.testing.assert_array_equal(dataset.labels, [1, 0])

    def test_invalid_utf8(self, tmp_path):
        path = tmp_path / "latin1.csv"
        path.write_bytes(b"a,label\n1.0,0\n\xe9,1\n")
        with pytest.raises(DatasetError, match="UTF-8"):
            load_csv_dataset(path)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("", encoding="utf-8")
        with pytest.raises(DatasetError, match="no data rows"):
            load_csv_dataset(path)

    def test_header_only(self, write_csv):
        with pytest.raises(DatasetError, match="no data rows"):
            load_csv_dataset(write_csv("header.csv", ["a", "label"], []))

    def test_non_numeric_feature_reports_line(self, write_csv):
        path = write_csv("text.csv", ["a", "label"], [[1.0, 0], ["abc", 1]])
        with pytest.raises(DatasetError, match="line 3"):
            load_csv_dataset(path)

    def test_non_integer_label(self, write_csv):
        with pytest.raises(DatasetError, match="line 2"):
            load_csv_dataset(write_csv("label.csv", ["a", "label"], [[1.0, "cat"]]))

    def test_unknown_label_column(self, write_csv):
        with pytest.raises(DatasetError, match="unknown label column"):
            load_csv_dataset(write_csv("cols.csv", ["a", "b"], [[1.0, 0]]))

    def test_wrong_column_count(self, tmp_path):
        path = tmp_path / "ragged.csv"
        path.write_text("a,b,label\n1.0,2.0,0\n1.0,1\n", encoding="utf-8")
        with pytest.raises(DatasetError, match="line 3"):
            load_csv_dataset(path)

    def test_zero_row_is_rejected(self, write_csv):
        with pytest.raises(DatasetError):
            load_csv_dataset(write_csv("zero.csv", ["a", "b", "label"], [[0.0, 0.0, 0]]))

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_csv_dataset(tmp_path / "absent.csv")

    def test_dataset_error_is_value_error(self):
        assert issubclass(DatasetError, ValueError)
