"""Canonical JSON, CSV and text rendering for report rows."""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable, Sequence


def canonical_json(obj: Any, indent: int = 2) -> str:
    """Sorted keys, floats at 17 significant digits; stable under parse/re-dump."""
    return _dump(obj, 0, indent) + "\n"


def _dump(obj, level, indent):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot encode {obj} as JSON")
        return format(obj, ".17g")
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_dump(obj[k], level + 1, indent)}"
                 for k in sorted(obj, key=str)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(x, (int, float, str, bool)) or x is None for x in obj):
            return "[" + ", ".join(_dump(x, level + 1, indent) for x in obj) + "]"
        items = [pad + _dump(x, level + 1, indent) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _cell(v):
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, (list, tuple)):
        if v and all(isinstance(s, (list, tuple)) for s in v):
            return ";".join(" ".join(map(_cell, s)) for s in v)
        return ";".join(map(_cell, v)) if any(isinstance(s, float) for s in v) \
            else " ".join(map(_cell, v))
    return "" if v is None else str(v)


def to_csv(rows: Sequence[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def to_text(rows: Sequence[dict], columns: Sequence[str]) -> str:
    table = [list(columns)] + [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(columns))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in table]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render(rows: Iterable[dict], columns: Sequence[str], fmt: str, meta: dict | None = None) -> str:
    rows = list(rows)
    if fmt == "json":
        return canonical_json({**(meta or {}), "rows": rows})
    if fmt == "csv":
        return to_csv(rows, columns)
    if fmt == "text":
        head = "".join(f"# {k}: {v}\n" for k, v in sorted((meta or {}).items()))
        return head + to_text(rows, columns)
    raise ValueError(f"unknown format {fmt!r}")
