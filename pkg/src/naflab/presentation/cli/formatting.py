"""Rendering of command results as json, csv or plain text."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

from naflab.config import OutputFormat

Record = Mapping[str, Any]


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Mapping | list | tuple):
        return json.dumps(value, ensure_ascii=False, separators=(",", ":"))
    return str(value)


def _render_csv(rows: Sequence[Record], columns: Sequence[str] | None) -> str:
    header = list(columns) if columns is not None else (list(rows[0]) if rows else [])
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(row.get(name)) for name in header])
    return buffer.getvalue()


def _plain_lines(record: Record, indent: str = "") -> list[str]:
    lines: list[str] = []
    for key, value in record.items():
        if isinstance(value, Mapping):
            lines.append(f"{indent}{key}:")
            lines.extend(_plain_lines(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], Mapping):
            lines.append(f"{indent}{key}:")
            for item in value:
                fields = ", ".join(f"{k}={_cell(v)}" for k, v in item.items())
                lines.append(f"{indent}  - {fields}")
        elif isinstance(value, list):
            lines.append(f"{indent}{key}: " + " ".join(_cell(item) for item in value))
        else:
            lines.append(f"{indent}{key}: {_cell(value)}")
    return lines


def _render_plain_table(rows: Sequence[Record], columns: Sequence[str] | None) -> str:
    header = list(columns) if columns is not None else (list(rows[0]) if rows else [])
    table = [header] + [[_cell(row.get(name)) for name in header] for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    rendered = [
        "  ".join(text.ljust(width) for text, width in zip(line, widths, strict=True)).rstrip()
        for line in table
    ]
    return "\n".join(rendered) + "\n"


def render(
    payload: Record | Sequence[Record],
    fmt: OutputFormat | str,
    *,
    columns: Sequence[str] | None = None,
) -> str:
    """Serialise one record or a table of records; output depends only on the payload."""
    fmt = OutputFormat(fmt)
    is_table = not isinstance(payload, Mapping)
    if fmt is OutputFormat.JSON:
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    if fmt is OutputFormat.CSV:
        rows = list(payload) if is_table else [payload]
        return _render_csv(rows, columns)
    if is_table:
        return _render_plain_table(list(payload), columns)
    return "\n".join(_plain_lines(payload)) + "\n"


def emit(text: str, out: str | None) -> None:
    """Write to ``out`` when given, otherwise to stdout."""
    if out:
        path = Path(out).expanduser()
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        return
    print(text, end="")
