"""
CSV and JSON rendering of report tables.

CSV: metadata as leading '# key: value' comment lines, then the header row and data rows.
Floats are written with a fixed number of significant digits (17 by default, enough to
round-trip a double). JSON mirrors the CSV as {"meta": ..., "header": ..., "rows": ...}.
"""

import csv
import io
import json
from pathlib import Path
from typing import Any

from xlgeod.cli.models import ReportTable
from xlgeod.config import get_config


def format_cell(value: Any, precision: int) -> str:
    """
    Locale-independent text form of one table cell.
    """
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, f".{precision}g")
    return str(value)


def render_csv(table: ReportTable, precision: int | None = None) -> str:
    precision = get_config().report.precision if precision is None else precision
    buf = io.StringIO()

    for key in sorted(table.metadata):
        value = table.metadata[key]
        text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
        buf.write(f"# {key}: {text}\n")
    buf.write(f"# checks: {json.dumps(table.checks, sort_keys=True)}\n")

    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([format_cell(v, precision) for v in row])
    return buf.getvalue()


def render_json(table: ReportTable) -> str:
    payload = {
        "meta": {**table.metadata, "checks": table.checks},
        "header": table.header,
        "rows": table.rows,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render(table: ReportTable, fmt: str) -> str:
    """
    Render a table in the requested format ('csv' or 'json').
    """
    return render_json(table) if fmt == "json" else render_csv(table)


def write_report(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def read_csv(text: str) -> tuple[dict[str, str], list[str], list[list[str]]]:
    """
    Split rendered CSV back into metadata, header and raw rows.

    Returns:
        (metadata text by key, header, rows of cell strings)
    """
    meta: dict[str, str] = {}
    body = []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(": ")
            meta[key] = value
        else:
            body.append(line)
    rows = list(csv.reader(body))
    return meta, rows[0], rows[1:]
