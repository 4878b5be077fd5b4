"""GraphSpec JSON files"""
from pathlib import Path
from typing import Union

import orjson
from pydantic import ValidationError

from core.exceptions import ProblemFormatError
from utils.serialization import read_json, write_json
from .graph_spec import GraphSpec


def load_graph_spec(path: Union[str, Path]) -> GraphSpec:
    """
    Read a GraphSpec document

    Raises:
        FileNotFoundError: If the file does not exist
        ProblemFormatError: If the document is not a valid GraphSpec
    """
    try:
        payload = read_json(path)
    except orjson.JSONDecodeError as e:
        raise ProblemFormatError(f"{path}: invalid JSON ({e})") from e
    try:
        return GraphSpec.model_validate(payload)
    except ValidationError as e:
        raise ProblemFormatError(f"{path}: malformed graph ({e.error_count()} error(s))") from e


def save_graph_spec(g: GraphSpec, path: Union[str, Path]) -> Path:
    return write_json(g.model_dump(mode="json"), path)
