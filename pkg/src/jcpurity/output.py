"""CSV / JSON serialization of scan records."""

from __future__ import annotations

import json
import math
import os

from .scan import FIELDS

__all__ = ["HEADER", "format_number", "format_records", "read_records", "write_records"]

HEADER = ",".join(FIELDS)


def format_number(x: float) -> str:
    """Shortest decimal that round-trips, with integral values written bare (``1``, ``-1``, ``0``)."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    if x == 0.0:
        return "0"
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def _rows(records):
    for rec in records:
        yield rec.row() if hasattr(rec, "row") else rec


def format_records(records, fmt: str) -> str:
    """Render records as CSV (fixed header) or as a JSON array of objects."""
    rows = list(_rows(records))
    if not rows:
        raise ValueError("no records to write")
    if fmt == "csv":
        lines = [HEADER]
        lines += [",".join(format_number(r[k]) for k in FIELDS) for r in rows]
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        objs = [{k: float(r[k]) + 0.0 for k in FIELDS} for r in rows]
        text = json.dumps(objs, indent=1) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return text


def write_records(records, fmt: str, path) -> None:
    """Write :func:`format_records` output to ``path``; nothing is created on error."""
    text = format_records(records, fmt)
    tmp = f"{os.fspath(path)}.part"
    with open(tmp, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def read_records(path, fmt: str | None = None) -> list[dict]:
    """Load rows written by :func:`write_records` back as dicts of floats."""
    path = os.fspath(path)
    if fmt is None:
        fmt = "json" if path.endswith(".json") else "csv"
    with open(path, encoding="ascii") as fh:
        if fmt == "json":
            return [{k: float(v) for k, v in obj.items()} for obj in json.load(fh)]
        header = fh.readline().strip().split(",")
        return [dict(zip(header, map(float, line.split(",")))) for line in fh if line.strip()]
