"""orjson wrappers used for every JSON payload"""
from pathlib import Path
from typing import Any, Union

import orjson

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SERIALIZE_NUMPY | orjson.OPT_APPEND_NEWLINE


def dumps(payload: Any) -> str:
    """Serialize payload to indented JSON text"""
    return orjson.dumps(payload, option=JSON_OPTIONS).decode("utf-8")


def loads(text: Union[str, bytes]) -> Any:
    """Parse JSON text; NaN and Infinity literals are rejected by orjson"""
    return orjson.loads(text)


def read_json(path: Union[str, Path]) -> Any:
    """
    Read a JSON document from disk

    Raises:
        FileNotFoundError: If the path does not exist
        orjson.JSONDecodeError: If the content is not valid JSON
    """
    file_path = Path(path)
    if not file_path.is_file():
        raise FileNotFoundError(f"File not found: {file_path}")
    return orjson.loads(file_path.read_bytes())


def write_json(payload: Any, path: Union[str, Path]) -> Path:
    """Write payload as JSON and return the path"""
    file_path = Path(path)
    file_path.write_bytes(orjson.dumps(payload, option=JSON_OPTIONS))
    return file_path


def write_text(text: str, path: Union[str, Path]) -> Path:
    """Write text with unix newlines"""
    file_path = Path(path)
    with file_path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    return file_path
