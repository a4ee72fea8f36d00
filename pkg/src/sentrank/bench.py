"""Wall-clock and reduction-ratio measurement across selection configs.

The bench times the reduction stage only (scoring + selection over already
parsed Documents); file parsing happens before the clock starts.  Absolute
seconds are environment-specific, so ``mean_tokens_after`` is reported next
to them as the portable proxy for downstream inference cost.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from statistics import median
from typing import Sequence

from .segmentation import Document
from .selection import ReducedDocument, SelectionConfig, reduce_document

CSV_COLUMNS = (
    "strategy",
    "mode",
    "level",
    "docs_per_sec",
    "total_seconds",
    "mean_tokens_before",
    "mean_tokens_after",
    "reduction_ratio",
)


@dataclass(frozen=True)
class BenchRow:
    strategy: str
    mode: str
    level: int
    docs_per_sec: float
    total_seconds: float
    mean_tokens_before: float
    mean_tokens_after: float
    reduction_ratio: float


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    doc_count: int
    repetitions: int
    workers: int
    timestamp: str


def _reduce_pass(
    docs: Sequence[Document],
    config: SelectionConfig,
    workers: int,
) -> list[ReducedDocument]:
    if workers <= 1:
        return [reduce_document(doc, config) for doc in docs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # executor.map restores input order, keeping output deterministic.
        return list(pool.map(lambda doc: reduce_document(doc, config), docs))


def run_bench(
    docs: Sequence[Document],
    configurations: Sequence[SelectionConfig],
    repetitions: int = 3,
    workers: int = 1,
) -> BenchReport:
    """Time every configuration over full passes of the same corpus.

    Each configuration runs ``repetitions`` times and the median elapsed
    time is reported, which resists scheduler noise better than the mean.
    Single-threaded by default for stable numbers; ``workers`` > 1 maps
    documents onto a thread pool and is recorded in the report.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    docs = list(docs)
    rows = []
    for config in configurations:
        elapsed: list[float] = []
        results: list[ReducedDocument] = []
        for _ in range(repetitions):
            start = time.perf_counter()
            results = _reduce_pass(docs, config, workers)
            elapsed.append(time.perf_counter() - start)
        total_seconds = float(median(elapsed))
        n = len(results)
        mean_before = (
            sum(r.metrics.tokens_before for r in results) / n if n else 0.0
        )
        mean_after = (
            sum(r.metrics.tokens_after for r in results) / n if n else 0.0
        )
        rows.append(
            BenchRow(
                strategy=config.strategy,
                mode=config.mode,
                level=config.level,
                docs_per_sec=n / total_seconds if total_seconds > 0 else float("inf"),
                total_seconds=total_seconds,
                mean_tokens_before=mean_before,
                mean_tokens_after=mean_after,
                reduction_ratio=mean_after / mean_before if mean_before else 0.0,
            )
        )
    return BenchReport(
        rows=tuple(rows),
        doc_count=len(docs),
        repetitions=repetitions,
        workers=workers,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )


def _row_cells(row: BenchRow) -> list[str]:
    return [
        row.strategy,
        row.mode,
        str(row.level),
        f"{row.docs_per_sec:.2f}",
        f"{row.total_seconds:.6f}",
        f"{row.mean_tokens_before:.2f}",
        f"{row.mean_tokens_after:.2f}",
        f"{row.reduction_ratio:.4f}",
    ]


def emit_report(report: BenchReport, format: str = "table") -> bytes:
    """Render the report as an aligned table or strict CSV.

    The CSV carries exactly the declared columns, no comments, so it feeds
    straight into downstream plotting.  The table form appends an
    environment note (doc count, repetitions, workers, timestamp).
    """
    if format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in report.rows:
            writer.writerow(_row_cells(row))
        return out.getvalue().encode("utf-8")
    if format != "table":
        raise ValueError(f"unknown report format {format!r}")

    table = [list(CSV_COLUMNS)] + [_row_cells(row) for row in report.rows]
    widths = [max(len(line[col]) for line in table) for col in range(len(CSV_COLUMNS))]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in table
    ]
    lines.append(
        f"# docs={report.doc_count} repetitions={report.repetitions} "
        f"workers={report.workers} timestamp={report.timestamp}"
    )
    return ("\n".join(lines) + "\n").encode("utf-8")
