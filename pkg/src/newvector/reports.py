"""JSON / CSV rendering of suite results.  Output is byte-stable for equal inputs."""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .suites import SuiteResult


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def to_json(results: Sequence[SuiteResult], meta: dict | None = None) -> str:
    doc = {
        "meta": meta or {},
        "passed": all(r.passed for r in results),
        "suites": [{"name": r.name, "passed": r.passed, "summary": r.summary, "rows": r.rows} for r in results],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def to_csv(results: Sequence[SuiteResult], meta: dict | None = None) -> str:
    rows = [{"suite": r.name, **row} for r in results for row in r.rows]
    columns = ["suite"]
    for row in rows:
        for k in row:
            if k not in columns:
                columns.append(k)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row[c]) if c in row else "" for c in columns])
    return buf.getvalue()


def render(results: Sequence[SuiteResult], fmt: str = "json", meta: dict | None = None) -> str:
    if fmt == "json":
        return to_json(results, meta)
    if fmt == "csv":
        return to_csv(results, meta)
    raise ValueError(f"unknown report format {fmt!r}")
