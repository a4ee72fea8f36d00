"""Accuracy/latency evaluation over reduced-corpus files.

Each input file is the output of the reducer CLI: an optional ``#`` header
line carrying the run configuration, then one JSON record per line with
``id``, ``reduced_text``, a passthrough gold ``label``, and the
``strategy``/``mode``/``level`` echo.  The harness parses these files
directly; it never imports the reducer.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from statistics import median
from typing import Sequence

from .adapters import ClassifierAdapter
from .errors import MissingLabel, RankevalError

HEADER_PREFIX = "#"


@dataclass(frozen=True)
class ReductionFile:
    """One reduced corpus plus its (strategy, mode, level) identity.

    The identity normally comes from the file itself; explicit values here
    override whatever the file says.
    """

    path: str | Path
    strategy: str | None = None
    mode: str | None = None
    level: int | None = None


@dataclass(frozen=True)
class EvalRecord:
    id: str
    text: str
    label: str | None


@dataclass(frozen=True)
class LoadedReduction:
    strategy: str
    mode: str
    level: int
    records: tuple[EvalRecord, ...]


@dataclass(frozen=True)
class EvalConfig:
    adapter: ClassifierAdapter
    files: Sequence[ReductionFile]
    repetitions: int = 1


@dataclass(frozen=True)
class EvalRow:
    strategy: str
    level: int
    accuracy: float
    eval_seconds: float
    n_docs: int


@dataclass(frozen=True)
class EvalReport:
    rows: tuple[EvalRow, ...] = field(default_factory=tuple)


def load_reduction(spec: ReductionFile) -> LoadedReduction:
    """Parse one reductions file; identity from override, header, or records."""
    meta: dict[str, object] = {}
    records: list[EvalRecord] = []
    with open(spec.path, "rb") as fh:
        for line_number, raw in enumerate(fh, start=1):
            line = raw.decode("utf-8").strip()
            if not line:
                continue
            if line.startswith(HEADER_PREFIX):
                parsed = json.loads(line[len(HEADER_PREFIX):])
                if isinstance(parsed, dict):
                    meta = parsed
                continue
            obj = json.loads(line)
            if not isinstance(obj, dict) or "id" not in obj or "reduced_text" not in obj:
                raise RankevalError(
                    f"{spec.path}: line {line_number} is not a reduction record"
                )
            records.append(
                EvalRecord(id=obj["id"], text=obj["reduced_text"], label=obj.get("label"))
            )
            for key in ("strategy", "mode", "level"):
                meta.setdefault(key, obj.get(key))
    strategy = spec.strategy or meta.get("strategy")
    mode = spec.mode or meta.get("mode")
    level = spec.level if spec.level is not None else meta.get("level")
    if strategy is None or mode is None or level is None:
        raise RankevalError(
            f"{spec.path}: cannot determine (strategy, mode, level); "
            "pass them explicitly"
        )
    return LoadedReduction(
        strategy=str(strategy), mode=str(mode), level=int(level),
        records=tuple(records),
    )


def _require_common_ids(loaded: Sequence[LoadedReduction], files) -> None:
    id_sets = [frozenset(r.id for r in item.records) for item in loaded]
    for item, ids, spec in zip(loaded, id_sets, files):
        if len(ids) != len(item.records):
            raise RankevalError(f"{spec.path}: duplicate record ids")
    if len(set(id_sets)) > 1:
        raise RankevalError(
            "reduction files do not share a common corpus id set; "
            "rows would not be comparable"
        )


def run_eval(config: EvalConfig) -> EvalReport:
    """Classify every file's texts and tabulate exact-match accuracy.

    The clock wraps only the adapter calls.  With ``repetitions`` > 1 each
    file is timed that many times and the median is reported; repetition
    rounds interleave across files so slow environmental drift (CPU
    clocking, cache warming) lands on every row evenly instead of skewing
    whichever file ran first.  Predictions come from the final pass.  Rows
    are sorted by (strategy, level).
    """
    if config.repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    if not config.files:
        return EvalReport(rows=())
    loaded = [load_reduction(spec) for spec in config.files]
    _require_common_ids(loaded, config.files)

    gold_per_file: list[list[str]] = []
    texts_per_file: list[list[str]] = []
    for item in loaded:
        gold = []
        for record in item.records:
            if record.label is None:
                raise MissingLabel(record.id)
            gold.append(record.label)
        gold_per_file.append(gold)
        texts_per_file.append([record.text for record in item.records])

    timings: list[list[float]] = [[] for _ in loaded]
    predictions: list[list[str]] = [[] for _ in loaded]
    for _ in range(config.repetitions):
        for i, texts in enumerate(texts_per_file):
            start = time.perf_counter()
            predictions[i] = config.adapter.classify(texts)
            timings[i].append(time.perf_counter() - start)

    rows = []
    for item, gold, preds, times in zip(loaded, gold_per_file, predictions, timings):
        matches = sum(1 for p, g in zip(preds, gold) if p == g)
        rows.append(
            EvalRow(
                strategy=item.strategy,
                level=item.level,
                accuracy=matches / len(gold) if gold else 0.0,
                eval_seconds=float(median(times)),
                n_docs=len(gold),
            )
        )
    rows.sort(key=lambda row: (row.strategy, row.level))
    return EvalReport(rows=tuple(rows))
