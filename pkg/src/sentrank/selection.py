"""Strategy-driven sentence selection and order-preserving reassembly.

A selection run ranks a document's sentences (positionally, randomly, or by
one of the score variants), keeps the best ``target_count`` of them, then
reassembles the survivors in original document order so the reduced text
stays coherent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import DegenerateDocument
from .scoring import DEFAULT_WEIGHTS, LambdaWeights, SentenceScore, score_document
from .segmentation import SENTENCE_JOINER, Document

STRATEGIES = ("first", "last", "random", "ranked", "ranked-normalized", "composite")
MODES = ("fixed", "percent")

# Strategies whose ranking consults sentence scores.
SCORE_STRATEGIES = frozenset({"ranked", "ranked-normalized", "composite"})

_MAX_SEED = 2**64


def strategy_uses_scores(strategy: str) -> bool:
    return strategy in SCORE_STRATEGIES


@dataclass(frozen=True)
class SelectionConfig:
    """Validated bundle of strategy, mode, level, weights, and seed.

    ``k`` is consulted in fixed mode, ``percent`` in percent mode; the
    other may stay None.  ``seed`` is mandatory for the random strategy so
    every run is reproducible.  ``weights`` only influence the composite
    strategy's ranking (they parameterize the composite score column).
    """

    strategy: str
    mode: str
    k: int | None = None
    percent: int | None = None
    weights: LambdaWeights = field(default=DEFAULT_WEIGHTS)
    seed: int | None = None
    rescale_length: bool = False

    def __post_init__(self) -> None:
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "fixed":
            if self.k is None or self.k < 1:
                raise ValueError("fixed mode requires k >= 1")
        else:
            if self.percent is None or not 1 <= self.percent <= 100:
                raise ValueError("percent mode requires percent in 1..100")
        if self.strategy == "random":
            if self.seed is None:
                raise ValueError("random strategy requires an explicit seed")
            if not 0 <= self.seed < _MAX_SEED:
                raise ValueError("seed must be an unsigned 64-bit integer")

    @property
    def level(self) -> int:
        """The level consulted by the active mode (k or percent)."""
        return self.k if self.mode == "fixed" else self.percent  # type: ignore[return-value]


@dataclass(frozen=True)
class ReductionMetrics:
    sentences_before: int
    sentences_after: int
    tokens_before: int
    tokens_after: int


@dataclass(frozen=True)
class ReducedDocument:
    """The surviving sentences of one document, in original order."""

    id: str
    selected_indices: tuple[int, ...]
    reduced_text: str
    label: str | None
    metrics: ReductionMetrics


def target_count(sentence_count: int, config: SelectionConfig) -> int:
    """How many sentences survive selection.

    Fixed mode clamps k to the document size.  Percent mode takes
    ceil(percent/100 * n) with a floor of one sentence, so short documents
    never reduce to nothing; integer arithmetic avoids float rounding
    surprises at exact multiples.
    """
    if sentence_count < 1:
        raise ValueError("sentence_count must be positive")
    if config.mode == "fixed":
        return min(config.k, sentence_count)  # type: ignore[type-var]
    count = (config.percent * sentence_count + 99) // 100  # type: ignore[operator]
    return max(1, min(count, sentence_count))


def _ordering(
    n: int,
    scores: Sequence[SentenceScore] | None,
    config: SelectionConfig,
) -> list[int]:
    strategy = config.strategy
    if strategy == "first":
        return list(range(n))
    if strategy == "last":
        return list(range(n - 1, -1, -1))
    if strategy == "random":
        # Argsort of per-index draws from a seeded Mersenne Twister: a
        # uniform shuffle built only on Random.random(), the one generator
        # output with a cross-version stability guarantee.
        rng = random.Random(config.seed)
        keys = [rng.random() for _ in range(n)]
        return sorted(range(n), key=lambda i: (keys[i], i))
    if scores is None:
        raise ValueError(f"strategy {strategy!r} requires sentence scores")
    if strategy == "ranked":
        return sorted(range(n), key=lambda i: (-scores[i].cumulative, i))
    if strategy == "ranked-normalized":
        return sorted(range(n), key=lambda i: (-scores[i].normalized, i))
    return sorted(range(n), key=lambda i: (-scores[i].composite, i))


def rank_order(
    scores: Sequence[SentenceScore],
    strategy: str,
    config: SelectionConfig,
) -> list[int]:
    """Permutation of sentence indices, best first.

    Ties always break toward the lower original index, which makes every
    strategy deterministic and gives nested selections across levels.
    ``strategy`` must match ``config.strategy``.
    """
    if strategy != config.strategy:
        raise ValueError("strategy argument disagrees with config.strategy")
    return _ordering(len(scores), scores, config)


def select(
    doc: Document,
    scores: Sequence[SentenceScore] | None,
    config: SelectionConfig,
) -> ReducedDocument:
    """Apply one selection config to a scored document.

    ``scores`` must be index-aligned with ``doc.sentences`` for the ranked
    strategies; positional and random strategies never consult them and
    accept None.
    """
    n = len(doc.sentences)
    if n == 0:
        raise DegenerateDocument(doc.id)
    if strategy_uses_scores(config.strategy):
        if scores is None:
            raise ValueError(f"strategy {config.strategy!r} requires scores")
        if len(scores) != n:
            raise ValueError(
                f"document {doc.id!r}: {len(scores)} scores for {n} sentences"
            )
    count = target_count(n, config)
    chosen = sorted(_ordering(n, scores, config)[:count])
    reduced_text = SENTENCE_JOINER.join(doc.sentences[i].text for i in chosen)
    tokens_before = sum(len(s.tokens) for s in doc.sentences)
    tokens_after = sum(len(doc.sentences[i].tokens) for i in chosen)
    return ReducedDocument(
        id=doc.id,
        selected_indices=tuple(chosen),
        reduced_text=reduced_text,
        label=doc.label,
        metrics=ReductionMetrics(
            sentences_before=n,
            sentences_after=len(chosen),
            tokens_before=tokens_before,
            tokens_after=tokens_after,
        ),
    )


def reduce_document(doc: Document, config: SelectionConfig) -> ReducedDocument:
    """Score (when the strategy needs it) and select, in one step.

    Scores are computed with ``config.weights`` only for strategies that
    consult them, so positional and random baselines cost what they look
    like they cost.
    """
    scores = (
        score_document(doc, config.weights, config.rescale_length)
        if strategy_uses_scores(config.strategy)
        else None
    )
    return select(doc, scores, config)


def reduce_corpus(
    docs: Iterable[Document],
    config: SelectionConfig,
) -> Iterator[ReducedDocument]:
    """Reduce a document stream, preserving input order.

    Degenerate documents raise; upstream policy decides whether that
    aborts the run or skips the record.
    """
    for doc in docs:
        yield reduce_document(doc, config)
