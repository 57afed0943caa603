"""Byte-stable CSV and JSON rendering for reports.

Golden-file regression tests diff these outputs verbatim, so formatting is
pinned: reals always carry exactly six fractional digits, JSON objects sort
their keys, CSV rows end with a bare newline.  The standard json module is
not used for emission because it formats floats with repr.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

CSV_COLUMNS = (
    "round",
    "observer",
    "subject",
    "outcome",
    "td_gen",
    "rv",
    "trustworthy",
    "risky",
    "arh_direct",
    "arh_combined",
)


def fmt_real(value: float) -> str:
    """Fixed six fractional digits; the one way reals are printed."""
    return f"{value:.6f}"


def fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def render_json(value: Any, indent: int = 0) -> str:
    """Deterministic JSON: sorted keys, fixed-point reals, no whitespace drift."""
    pad = "  " * indent
    inner_pad = "  " * (indent + 1)
    if value is None:
        return "null"
    if isinstance(value, bool):
        return fmt_bool(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return fmt_real(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = []
        for key in sorted(value):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            items.append(f"{inner_pad}{json.dumps(key)}: {render_json(value[key], indent + 1)}")
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{inner_pad}{render_json(item, indent + 1)}" for item in value]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    raise TypeError(f"cannot render {type(value).__name__} as JSON")


def render_csv(rows: list[tuple]) -> str:
    """CSV text with the fixed report header; cells must be pre-formatted."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
    return buffer.getvalue()
