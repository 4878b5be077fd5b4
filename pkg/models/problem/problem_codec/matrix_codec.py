"""Dense and triplet encodings of matrices in problem files"""
import math
from typing import Any, Dict, List, Optional, Union

import numpy as np
import scipy.sparse as sp

from core.exceptions import ProblemFormatError

TRIPLET_KEYS = ("rows", "cols", "vals", "shape")


def _check_number(value: Any, location: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ProblemFormatError(f"{location}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ProblemFormatError(f"{location}: non-finite number {value!r}")
    return float(value)


def decode_vector(payload: Any, location: str) -> np.ndarray:
    """Decode a list of numbers"""
    if not isinstance(payload, list):
        raise ProblemFormatError(f"{location}: expected a list of numbers")
    return np.array(
        [_check_number(value, f"{location}[{i}]") for i, value in enumerate(payload)],
        dtype=np.float64,
    )


def decode_matrix(
    payload: Any,
    location: str,
    empty_shape: Optional[tuple[int, int]] = None,
) -> Union[np.ndarray, sp.csr_array]:
    """
    Decode a dense row-major matrix or a {rows, cols, vals, shape} triplet list

    Args:
        payload: Decoded JSON value
        location: Field name used in error messages
        empty_shape: Shape given to a dense ``[]``

    Returns:
        Dense array or sparse matrix

    Raises:
        ProblemFormatError: If the encoding is malformed
    """
    if isinstance(payload, dict):
        missing = [key for key in TRIPLET_KEYS if key not in payload]
        if missing:
            raise ProblemFormatError(f"{location}: triplet encoding misses {missing}")
        shape = payload["shape"]
        if (
            not isinstance(shape, list)
            or len(shape) != 2
            or any(isinstance(d, bool) or not isinstance(d, int) or d < 0 for d in shape)
        ):
            raise ProblemFormatError(f"{location}: shape must be two nonnegative integers")
        rows, cols = payload["rows"], payload["cols"]
        vals = decode_vector(payload["vals"], f"{location}.vals")
        if not (isinstance(rows, list) and isinstance(cols, list)) or not (
            len(rows) == len(cols) == vals.size
        ):
            raise ProblemFormatError(f"{location}: rows, cols and vals must have equal length")
        for index in list(rows) + list(cols):
            if isinstance(index, bool) or not isinstance(index, int):
                raise ProblemFormatError(f"{location}: triplet indices must be integers")
        if any(not 0 <= r < shape[0] for r in rows) or any(not 0 <= c < shape[1] for c in cols):
            raise ProblemFormatError(f"{location}: triplet index outside shape {shape}")
        return sp.csr_array(
            sp.coo_array(
                (vals, (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
                shape=tuple(shape),
            ), dtype=np.float64
        )

    if not isinstance(payload, list):
        raise ProblemFormatError(f"{location}: expected a matrix")
    if not payload:
        return np.zeros(empty_shape or (0, 0))
    if not all(isinstance(row, list) for row in payload):
        raise ProblemFormatError(f"{location}: dense matrix must be a list of rows")
    width = len(payload[0])
    if any(len(row) != width for row in payload):
        raise ProblemFormatError(f"{location}: rows have different lengths")
    return np.array(
        [decode_vector(row, f"{location}[{i}]") for i, row in enumerate(payload)],
        dtype=np.float64,
    ).reshape(len(payload), width)


def _plain(value: float) -> Union[int, float]:
    value = float(value)
    if value == 0:
        return 0
    return int(value) if value.is_integer() and abs(value) < 2**53 else value


def encode_matrix(matrix: Any, sparse: bool = False) -> Union[List[List[float]], Dict[str, Any]]:
    """Encode a matrix densely or as a triplet list with explicit shape"""
    csr = sp.csr_array(matrix, dtype=np.float64)
    if sparse:
        coo = csr.tocoo()
        order = np.lexsort((coo.col, coo.row))
        return {
            "rows": [int(v) for v in coo.row[order]],
            "cols": [int(v) for v in coo.col[order]],
            "vals": [_plain(v) for v in coo.data[order]],
            "shape": [int(csr.shape[0]), int(csr.shape[1])],
        }
    return [[_plain(v) for v in row] for row in csr.toarray()]


def encode_vector(vector: Any) -> List[Union[int, float]]:
    return [_plain(v) for v in np.asarray(vector, dtype=np.float64).reshape(-1)]
