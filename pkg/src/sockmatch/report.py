"""Rendering of records as markdown, CSV or JSON text.

Exact counts are always written as decimal strings; in JSON this keeps them
exact for consumers whose integers stop at 2**63.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, Sequence

FORMATS = ("markdown", "csv", "json")


def format_decimal(value: Fraction, digits: int) -> str:
    """``value`` rounded (half to even) to ``digits`` places after the point."""
    scaled = round(value * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_markdown(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    lines = ["| " + " | ".join(columns) + " |", "|" + "|".join("---" for _ in columns) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(_cell(v) for v in row) + " |")
    return "\n".join(lines) + "\n"


def render_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def render_json(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"


def render_records(fmt: str, columns: Sequence[str], rows: Sequence[Sequence[Any]], meta: dict | None = None) -> str:
    """Render rows in ``fmt``; JSON wraps them as ``{**meta, "rows": [...]}``."""
    if fmt == "markdown":
        return render_markdown(columns, rows)
    if fmt == "csv":
        return render_csv(columns, rows)
    if fmt == "json":
        doc = dict(meta or {})
        doc["rows"] = [dict(zip(columns, row)) for row in rows]
        return render_json(doc)
    raise ValueError(f"unknown format {fmt!r}")
