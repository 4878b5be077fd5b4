"""JSON and CSV helpers"""

from .json_io import dumps, loads, read_json, write_json, write_text
from .csv_io import rows_to_csv

__all__ = ["dumps", "loads", "read_json", "write_json", "write_text", "rows_to_csv"]
