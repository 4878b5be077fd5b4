"""Reads and writes problem instances as JSON documents"""
from pathlib import Path
from typing import Any, Dict, Union

import orjson
from pydantic import ValidationError

from core.exceptions import ProblemFormatError
from utils.serialization import read_json, write_json
from ..problem_data import ProblemData
from .matrix_codec import decode_matrix, decode_vector, encode_matrix, encode_vector

REQUIRED_FIELDS = ("n", "M", "A", "B_blocks", "E", "s", "r_blocks")


def _count(payload: Dict[str, Any], key: str) -> int:
    value = payload[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ProblemFormatError(f"{key}: expected an integer, got {value!r}")
    return value


def problem_from_dict(payload: Any) -> ProblemData:
    """
    Decode a problem document

    Args:
        payload: Parsed JSON object

    Returns:
        ProblemData (not yet validated)

    Raises:
        ProblemFormatError: If fields are missing, malformed or non-finite
    """
    if not isinstance(payload, dict):
        raise ProblemFormatError("Problem document must be a JSON object")
    missing = [key for key in REQUIRED_FIELDS if key not in payload]
    if missing:
        raise ProblemFormatError(f"Problem document misses fields {missing}")
    n, M = _count(payload, "n"), _count(payload, "M")
    if not isinstance(payload["B_blocks"], list) or not isinstance(payload["r_blocks"], list):
        raise ProblemFormatError("B_blocks and r_blocks must be lists")

    try:
        return ProblemData(
            n=n,
            M=M,
            A=decode_matrix(payload["A"], "A", (n, n)),
            B_blocks=[
                decode_matrix(block, f"B_blocks[{i}]", (n, 0))
                for i, block in enumerate(payload["B_blocks"])
            ],
            E=decode_matrix(payload["E"], "E", (M, n)),
            s=decode_vector(payload["s"], "s"),
            r_blocks=[
                decode_vector(block, f"r_blocks[{i}]")
                for i, block in enumerate(payload["r_blocks"])
            ],
        )
    except ValidationError as e:
        raise ProblemFormatError(f"Invalid problem document: {e}") from e


def problem_to_dict(prob: ProblemData, sparse: bool = False) -> Dict[str, Any]:
    """Encode a problem as a JSON-ready dict"""
    return {
        "n": prob.n,
        "M": prob.M,
        "A": encode_matrix(prob.A, sparse),
        "B_blocks": [encode_matrix(block, sparse) for block in prob.B_blocks],
        "E": encode_matrix(prob.E, sparse),
        "s": encode_vector(prob.s),
        "r_blocks": [encode_vector(block) for block in prob.r_blocks],
    }


def load_problem(path: Union[str, Path]) -> ProblemData:
    """
    Load a problem file

    Raises:
        FileNotFoundError: If the file does not exist
        ProblemFormatError: If the content cannot be decoded
    """
    try:
        payload = read_json(path)
    except orjson.JSONDecodeError as e:
        raise ProblemFormatError(f"{path}: not valid JSON ({e})") from e
    return problem_from_dict(payload)


def save_problem(prob: ProblemData, path: Union[str, Path], sparse: bool = False) -> Path:
    """Write a problem file"""
    return write_json(problem_to_dict(prob, sparse), path)
