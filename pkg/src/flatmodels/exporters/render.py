"""Rendering of results as plain text, JSON or CSV, and the output sink."""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from typing import Any, Iterable, Sequence

from ..config.models import OutputFormat


def render_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def render_plain(lines: Iterable[Any]) -> str:
    return "".join(f"{line}\n" for line in lines)


def render_table(
    fmt: OutputFormat,
    header: Sequence[str],
    rows: Sequence[Sequence[Any]],
    *,
    string_columns: Sequence[str] = (),
) -> str:
    """Render a list of records; ``string_columns`` become decimal strings in JSON."""
    if fmt == "csv":
        return render_csv(header, rows)
    if fmt == "json":
        records = []
        for row in rows:
            rec = {}
            for name, value in zip(header, row):
                rec[name] = str(value) if name in string_columns else value
            records.append(rec)
        return render_json(records)
    return render_plain(" ".join(str(v) for v in row) for row in rows)


def write_output(text: str, path: str | None = None) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)


__all__ = ["render_json", "render_csv", "render_plain", "render_table", "write_output"]
