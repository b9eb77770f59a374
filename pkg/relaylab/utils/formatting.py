"""Rendering of results for the CLI and the HTTP surface.

Machine formats (JSON, JSON-lines, CSV) write every float with 17 significant
digits in scientific notation so values round-trip exactly and diffs stay
stable. Human tables print 6 decimals.
"""

import csv
import io
import json
import math
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path
from typing import Any

from pydantic import BaseModel

MACHINE_FLOAT_FORMAT = ".16e"
TABLE_FLOAT_FORMAT = ".6f"


def format_float(value: float) -> str:
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    return format(value, MACHINE_FLOAT_FORMAT)


def _plain(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump()
    return value


def _encode(value: Any, indent: int | None, level: int) -> str:
    value = _plain(value)
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (str, Path)):
        return json.dumps(str(value))
    newline = "" if indent is None else "\n" + " " * (indent * (level + 1))
    closing = "" if indent is None else "\n" + " " * (indent * level)
    separator = ","
    colon = ":" if indent is None else ": "
    if isinstance(value, Mapping):
        if not value:
            return "{}"
        items = [
            f"{newline}{json.dumps(str(k))}{colon}{_encode(v, indent, level + 1)}"
            for k, v in value.items()
        ]
        return "{" + separator.join(items) + closing + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{newline}{_encode(v, indent, level + 1)}" for v in value]
        return "[" + separator.join(items) + closing + "]"
    # numpy scalars and anything else float-like
    return format_float(float(value))


def render_json(value: Any) -> str:
    """Pretty JSON with machine-format floats."""
    return _encode(value, indent=2, level=0) + "\n"


def render_jsonl(values: Iterable[Any]) -> str:
    """One compact JSON record per line."""
    return "".join(_encode(v, indent=None, level=0) + "\n" for v in values)


def _csv_cell(value: Any) -> Any:
    if isinstance(value, float):
        return format_float(value)
    return value


def render_csv(columns: Sequence[str], rows: Iterable[Mapping[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n"
    )
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_cell(v) for k, v in row.items()})
    return buf.getvalue()


def _table_cell(value: Any) -> str:
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, float):
        return format(value, TABLE_FLOAT_FORMAT)
    return str(value)


def render_table(columns: Sequence[str], rows: Iterable[Mapping[str, Any]]) -> str:
    """Fixed-width text table."""
    cells = [[_table_cell(row.get(c)) for c in columns] for row in rows]
    widths = [
        max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)
    ]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells)
    return "\n".join(lines) + "\n"


def render_fields(fields: Mapping[str, Any]) -> str:
    """Two-column ``name  value`` table for a single record."""
    width = max((len(k) for k in fields), default=0)
    return "".join(f"{k.ljust(width)}  {_table_cell(v)}\n" for k, v in fields.items())
