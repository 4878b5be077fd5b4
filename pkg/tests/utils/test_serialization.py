"""Tests for JSON and CSV helpers"""
import numpy as np
import orjson
import pytest

from utils.serialization import dumps, loads, read_json, rows_to_csv, write_json, write_text


class TestJson:
    def test_numpy_payloads(self):
        """Test serialization of numpy arrays"""
        assert loads(dumps({"p": np.array([1.0, 0.5])})) == {"p": [1.0, 0.5]}

    def test_trailing_newline(self):
        """Test output ends with a newline"""
        assert dumps([1]).endswith("\n")

    def test_rejects_nan_literal(self):
        """Test that NaN is not valid input"""
        with pytest.raises(orjson.JSONDecodeError):
            loads("[NaN]")

    def test_file_round_trip(self, tmp_path):
        """Test writing and reading a document"""
        path = write_json({"a": [1, 2]}, tmp_path / "doc.json")
        assert read_json(path) == {"a": [1, 2]}

    def test_missing_file(self, tmp_path):
        """Test reading an absent file"""
        with pytest.raises(FileNotFoundError):
            read_json(tmp_path / "absent.json")


class TestCsv:
    def test_float_repr(self):
        """Test floats written exactly"""
        text = rows_to_csv(["a", "b"], [[1, 0.1], [np.int64(2), np.float64(1 / 3)]])
        assert text == "a,b\n1,0.1\n2,0.3333333333333333\n"

    def test_unix_newlines(self, tmp_path):
        """Test text written without platform newlines"""
        path = write_text("x\ny\n", tmp_path / "t.txt")
        assert path.read_bytes() == b"x\ny\n"
