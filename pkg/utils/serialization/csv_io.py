"""CSV text building for traces and trajectories"""
import csv
import io
from typing import Any, Iterable, Sequence


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return repr(float(value))
    if hasattr(value, "item"):
        return _cell(value.item())
    return str(value)


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    Render a header and rows as CSV text

    Floats are written with repr so values survive a round trip exactly.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue()
