"""CSV and JSON writers with deterministic formatting."""

from __future__ import annotations

import csv
import io
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

import orjson

from ..const import CSV_PRECISION

type Cell = float | int | bool | str | None

_JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_SERIALIZE_NUMPY


def format_real(value: float, precision: int = CSV_PRECISION) -> str:
    """Scientific notation with ``precision`` significant digits."""
    return f"{value:.{precision - 1}e}"


def format_cell(value: Cell, precision: int = CSV_PRECISION) -> str:
    """Render one CSV cell; empty for missing values, 0/1 for flags."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int | str):
        return str(value)
    return format_real(value, precision)


def render_csv(
    header: Sequence[str],
    rows: Iterable[Sequence[Cell]],
    precision: int = CSV_PRECISION,
) -> str:
    """CSV text with a header row and "\\n" line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(format_cell(cell, precision) for cell in row)
    return buffer.getvalue()


def dumps_json(payload: Any) -> bytes:
    """Indented JSON with sorted keys."""
    return orjson.dumps(payload, option=_JSON_OPTIONS)


def emit(data: str | bytes, path: Path | None) -> None:
    """Write to ``path`` or to stdout."""
    raw = data.encode() if isinstance(data, str) else data
    if path is None:
        sys.stdout.buffer.write(raw)
        sys.stdout.buffer.flush()
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(raw)
