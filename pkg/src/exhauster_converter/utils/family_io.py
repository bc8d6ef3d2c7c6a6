"""Reading and writing family files and parsing command line directions."""

import json
import math
from pathlib import Path
from typing import List

from pydantic import ValidationError

from ..models import Family
from .errors import DimensionMismatchError, ExhausterError, FamilyFileError


def read_family(path: Path) -> Family:
    """
    Load a family from its JSON file.

    The file holds {"kind": ..., "space_dim": n, "sets": [{"vertices": [...]}, ...]}
    with coexhauster vertices of length n+1, affine constant first.

    Raises:
        FamilyFileError: If the file cannot be read or does not describe a
            valid family.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise FamilyFileError(f"Cannot read family file: {e.strerror}", path=str(path)) from e
    except UnicodeDecodeError as e:
        raise FamilyFileError(f"Family file is not UTF-8 text: {e.reason}", path=str(path)) from e
    try:
        return Family.model_validate_json(text)
    except ValidationError as e:
        raise _contextualize_error(e, path) from e


def write_family(family: Family, path: Path) -> None:
    """
    Write a family as JSON.

    Floats are written in shortest round-trip form, so reading the file back
    yields an equal family.

    Raises:
        FamilyFileError: If the file cannot be written.
    """
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(family.model_dump_json(indent=2) + "\n", encoding="utf-8")
    except OSError as e:
        raise FamilyFileError(f"Cannot write family file: {e.strerror}", path=str(path)) from e


def _contextualize_error(e: ValidationError, path: Path) -> FamilyFileError:
    """Turn a pydantic error into a one-line message naming the first problem."""
    first = e.errors()[0]
    if first["type"] == "json_invalid":
        message = f"File is not valid JSON: {first['msg']}"
    else:
        location = ".".join(str(part) for part in first["loc"]) or "document"
        message = f"Invalid family at {location}: {first['msg']}"
    if e.error_count() > 1:
        message += f" (and {e.error_count() - 1} more problems)"
    return FamilyFileError(message, path=str(path), details={"errors": json.loads(e.json())})


def parse_direction(text: str, space_dim: int) -> List[float]:
    """
    Parse a comma-separated direction such as "1, 0,-2.5".

    Raises:
        ExhausterError: If a component is not a number.
        DimensionMismatchError: If the length differs from space_dim.
    """
    parts = [part.strip() for part in text.split(",")]
    try:
        values = [float(part) for part in parts]
    except ValueError as e:
        raise ExhausterError(f"Cannot parse direction {text!r}: {e}") from e
    if not all(math.isfinite(x) for x in values):
        raise ExhausterError(f"Direction {text!r} has non-finite components")
    if len(values) != space_dim:
        raise DimensionMismatchError("direction", space_dim, len(values))
    return values
