"""Render evaluation reports as aligned text, CSV, or markdown."""

from __future__ import annotations

import csv
import io

from .evaluate import EvalReport, EvalRow

CSV_COLUMNS = ("strategy", "level", "accuracy", "eval_seconds", "n_docs")


def _cells(row: EvalRow) -> list[str]:
    return [
        row.strategy,
        str(row.level),
        f"{row.accuracy:.4f}",
        f"{row.eval_seconds:.4f}",
        str(row.n_docs),
    ]


def render_report(report: EvalReport, format: str = "table") -> bytes:
    if format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in report.rows:
            writer.writerow(_cells(row))
        return out.getvalue().encode("utf-8")

    header = list(CSV_COLUMNS)
    table = [header] + [_cells(row) for row in report.rows]

    if format == "markdown":
        widths = [max(len(line[i]) for line in table) for i in range(len(header))]
        lines = []
        for n, line in enumerate(table):
            lines.append(
                "| " + " | ".join(c.ljust(w) for c, w in zip(line, widths)) + " |"
            )
            if n == 0:
                lines.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
        return ("\n".join(lines) + "\n").encode("utf-8")

    if format != "table":
        raise ValueError(f"unknown report format {format!r}")

    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    lines = [
        "  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in table
    ]
    return ("\n".join(lines) + "\n").encode("utf-8")
