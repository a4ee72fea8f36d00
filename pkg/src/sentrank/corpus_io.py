"""Line-delimited corpus reading and reduction-result writing.

Input files carry one JSON object per line with fields ``id`` (required,
unique), ``text`` (required, non-blank), and optional ``label``.  Output
files use the same framing, with a single ``#``-prefixed header line that
echoes the effective configuration so results stay self-describing; plain
line parsers can skip it.

Readers and writers are generators over streams: memory stays bounded by
the largest single record (plus the id set kept for duplicate detection).
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass
from statistics import mean, median
from typing import IO, Iterable, Iterator, Mapping

from .errors import DegenerateDocument, DuplicateId, MalformedLine
from .segmentation import DEFAULT_RULES, Document, SegmentationRules, build_document
from .selection import ReducedDocument, ReductionMetrics, SelectionConfig

logger = logging.getLogger(__name__)

HEADER_PREFIX = "#"

_POLICIES = ("abort", "skip")


@dataclass(frozen=True)
class CorpusRecord:
    id: str
    text: str
    label: str | None = None


def _parse_record(line_number: int, payload: str) -> CorpusRecord:
    try:
        obj = json.loads(payload)
    except json.JSONDecodeError as exc:
        raise MalformedLine(line_number, f"invalid JSON: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise MalformedLine(line_number, "record is not a JSON object")
    doc_id = obj.get("id")
    if not isinstance(doc_id, str) or not doc_id:
        raise MalformedLine(line_number, "missing or empty 'id'")
    text = obj.get("text")
    if not isinstance(text, str):
        raise MalformedLine(line_number, "missing 'text'")
    if not text.strip():
        raise MalformedLine(line_number, "'text' is blank")
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise MalformedLine(line_number, "'label' must be a string when present")
    return CorpusRecord(id=doc_id, text=text, label=label)


def iter_corpus_records(
    stream: Iterable[bytes],
    on_malformed: str = "abort",
) -> Iterator[tuple[int, CorpusRecord]]:
    """Yield (line_number, record) pairs from a byte stream in file order.

    Invalid UTF-8 or an unparseable record is a :class:`MalformedLine`;
    the ``skip`` policy logs it and moves on instead.  A repeated id is a
    :class:`DuplicateId` under either policy.  Blank lines are ignored.
    """
    if on_malformed not in _POLICIES:
        raise ValueError(f"on_malformed must be one of {_POLICIES}")
    seen: set[str] = set()
    for line_number, raw in enumerate(stream, start=1):
        try:
            try:
                payload = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise MalformedLine(line_number, f"invalid UTF-8: {exc.reason}") from exc
            if not payload.strip():
                continue
            record = _parse_record(line_number, payload)
        except MalformedLine as exc:
            if on_malformed == "abort":
                raise
            logger.warning("skipping %s", exc)
            continue
        if record.id in seen:
            raise DuplicateId(record.id, line_number)
        seen.add(record.id)
        yield line_number, record


def read_corpus(
    stream: Iterable[bytes],
    rules: SegmentationRules = DEFAULT_RULES,
    *,
    on_malformed: str = "abort",
    on_degenerate: str = "abort",
) -> Iterator[Document]:
    """Stream Documents out of a corpus file, in file order."""
    if on_degenerate not in _POLICIES:
        raise ValueError(f"on_degenerate must be one of {_POLICIES}")
    for line_number, record in iter_corpus_records(stream, on_malformed):
        try:
            yield build_document(record.id, record.text, record.label, rules)
        except DegenerateDocument as exc:
            if on_degenerate == "abort":
                raise MalformedLine(line_number, str(exc)) from exc
            logger.warning("skipping line %d: %s", line_number, exc)


def write_corpus(records: Iterable[CorpusRecord], stream: IO[bytes]) -> int:
    """Write corpus records one JSON object per line; returns the count."""
    count = 0
    for record in records:
        obj: dict[str, object] = {"id": record.id, "text": record.text}
        if record.label is not None:
            obj["label"] = record.label
        stream.write(json.dumps(obj, ensure_ascii=False).encode("utf-8") + b"\n")
        count += 1
    return count


@dataclass(frozen=True)
class ReductionRecord:
    """One reduced document as serialized to the output file."""

    id: str
    reduced_text: str
    label: str | None
    selected_indices: tuple[int, ...]
    strategy: str
    mode: str
    level: int
    seed: int | None
    metrics: ReductionMetrics

    @classmethod
    def from_reduced(
        cls, reduced: ReducedDocument, config: SelectionConfig
    ) -> "ReductionRecord":
        return cls(
            id=reduced.id,
            reduced_text=reduced.reduced_text,
            label=reduced.label,
            selected_indices=reduced.selected_indices,
            strategy=config.strategy,
            mode=config.mode,
            level=config.level,
            seed=config.seed if config.strategy == "random" else None,
            metrics=reduced.metrics,
        )

    def to_obj(self) -> dict[str, object]:
        obj: dict[str, object] = {
            "id": self.id,
            "reduced_text": self.reduced_text,
            "label": self.label,
            "selected_indices": list(self.selected_indices),
            "strategy": self.strategy,
            "mode": self.mode,
            "level": self.level,
            "metrics": asdict(self.metrics),
        }
        if self.seed is not None:
            obj["seed"] = self.seed
        return obj

    @classmethod
    def from_obj(cls, line_number: int, obj: object) -> "ReductionRecord":
        if not isinstance(obj, dict):
            raise MalformedLine(line_number, "record is not a JSON object")
        try:
            metrics = ReductionMetrics(**obj["metrics"])
            return cls(
                id=obj["id"],
                reduced_text=obj["reduced_text"],
                label=obj.get("label"),
                selected_indices=tuple(obj["selected_indices"]),
                strategy=obj["strategy"],
                mode=obj["mode"],
                level=obj["level"],
                seed=obj.get("seed"),
                metrics=metrics,
            )
        except (KeyError, TypeError) as exc:
            raise MalformedLine(line_number, f"bad reduction record: {exc}") from exc


def write_reductions(
    reductions: Iterable[ReducedDocument],
    config: SelectionConfig,
    stream: IO[bytes],
    *,
    provenance: Mapping[str, object] | None = None,
) -> int:
    """Write a header line plus one record line per reduction.

    The header carries the effective configuration (strategy, mode, level,
    lambda pair, seed) merged with any extra ``provenance`` entries, e.g.
    stopword digest and toolkit version.  Returns the record count.
    """
    header: dict[str, object] = {
        "strategy": config.strategy,
        "mode": config.mode,
        "level": config.level,
        "lambda1": config.weights.lambda1,
        "lambda2": config.weights.lambda2,
        "rescale_length": config.rescale_length,
    }
    if config.seed is not None:
        header["seed"] = config.seed
    if provenance:
        header.update(provenance)
    stream.write(
        HEADER_PREFIX.encode("utf-8")
        + json.dumps(header, ensure_ascii=False).encode("utf-8")
        + b"\n"
    )
    count = 0
    for reduced in reductions:
        record = ReductionRecord.from_reduced(reduced, config)
        stream.write(
            json.dumps(record.to_obj(), ensure_ascii=False).encode("utf-8") + b"\n"
        )
        count += 1
    return count


def read_reductions(
    stream: Iterable[bytes],
) -> tuple[dict[str, object] | None, Iterator[ReductionRecord]]:
    """Parse a reductions file back into (header, record iterator).

    The header is consumed eagerly; records stream lazily.  Files written
    by other tools may omit the header, in which case it comes back None.
    """
    numbered = enumerate(iter(stream), start=1)
    header: dict[str, object] | None = None
    first_record: tuple[int, bytes] | None = None
    for line_number, raw in numbered:
        if not raw.strip():
            continue
        if raw.startswith(HEADER_PREFIX.encode("utf-8")):
            try:
                parsed = json.loads(raw.decode("utf-8")[len(HEADER_PREFIX):])
            except (UnicodeDecodeError, json.JSONDecodeError) as exc:
                raise MalformedLine(line_number, f"bad header line: {exc}") from exc
            header = parsed if isinstance(parsed, dict) else None
        else:
            first_record = (line_number, raw)
        break

    def records() -> Iterator[ReductionRecord]:
        if first_record is not None:
            yield _parse_reduction_line(*first_record)
        for line_number, raw in numbered:
            if not raw.strip():
                continue
            yield _parse_reduction_line(line_number, raw)

    return header, records()


def _parse_reduction_line(line_number: int, raw: bytes) -> ReductionRecord:
    try:
        obj = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedLine(line_number, f"invalid record line: {exc}") from exc
    return ReductionRecord.from_obj(line_number, obj)


@dataclass(frozen=True)
class Distribution:
    min: int
    median: float
    mean: float
    max: int


@dataclass(frozen=True)
class CorpusStats:
    doc_count: int
    sentences: Distribution | None
    tokens: Distribution | None

    def to_obj(self) -> dict[str, object]:
        return {
            "doc_count": self.doc_count,
            "sentences": asdict(self.sentences) if self.sentences else None,
            "tokens": asdict(self.tokens) if self.tokens else None,
        }


def _distribution(values: list[int]) -> Distribution:
    return Distribution(
        min=min(values),
        median=float(median(values)),
        mean=float(mean(values)),
        max=max(values),
    )


def corpus_stats(docs: Iterable[Document]) -> CorpusStats:
    """Summarize sentence and token counts; useful for picking k/percent."""
    sentence_counts: list[int] = []
    token_counts: list[int] = []
    for doc in docs:
        sentence_counts.append(len(doc.sentences))
        token_counts.append(sum(len(s.tokens) for s in doc.sentences))
    if not sentence_counts:
        return CorpusStats(doc_count=0, sentences=None, tokens=None)
    return CorpusStats(
        doc_count=len(sentence_counts),
        sentences=_distribution(sentence_counts),
        tokens=_distribution(token_counts),
    )
