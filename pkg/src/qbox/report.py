"""Deterministic JSON/CSV emission for every report type.

Reals are written with 17 significant digits, so a float survives a write/read
cycle bit for bit and identical inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from pathlib import Path

import numpy as np

__all__ = ["format_real", "to_json", "to_csv", "render_report"]


def format_real(x: float) -> str:
    return f"{float(x):.17g}"


def _emit(obj, out: list[str], indent: int) -> None:
    pad = "  " * indent
    if obj is None or (isinstance(obj, float) and not math.isfinite(obj)):
        out.append("null")
    elif isinstance(obj, (bool, np.bool_)):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(format_real(obj))
    elif isinstance(obj, (complex, np.complexfloating)):
        _emit([obj.real, obj.imag], out, indent)
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, enum.Enum):
        out.append(json.dumps(obj.value))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, value) in enumerate(obj.items()):
            out.append(f"{pad}  {json.dumps(str(key))}: ")
            _emit(value, out, indent + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        items = list(obj)
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in items):
            parts: list[str] = []
            for v in items:
                _emit(v, parts, 0)
                parts.append(", ")
            out.append("[" + "".join(parts[:-1]) + "]")
            return
        out.append("[\n")
        for i, value in enumerate(items):
            out.append(pad + "  ")
            _emit(value, out, indent + 1)
            out.append(",\n" if i < len(items) - 1 else "\n")
        out.append(pad + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(report) -> str:
    data = report.to_dict() if hasattr(report, "to_dict") else report
    out: list[str] = []
    _emit(data, out, 0)
    return "".join(out) + "\n"


def _cell(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_real(value)
    return str(value)


def to_csv(report) -> str:
    header, rows = report.csv_table()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def render_report(report, fmt: str = "json", output_path: str | Path | None = None) -> str:
    """Serialize ``report`` as ``json`` or ``csv``; write it to ``output_path`` if given.

    Raises ``OSError`` when the file cannot be written.
    """
    if fmt == "json":
        text = to_json(report)
    elif fmt == "csv":
        text = to_csv(report)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if output_path is not None:
        with open(output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text
