"""Per-document TF-IDF statistics and the three sentence score variants.

Each sentence of one document plays the role of a "document" in the classic
TF-IDF setup: term frequency is relative to the sentence, and inverse
document frequency is computed against the sentence set of that article
alone.  Three rankings fall out of this:

* cumulative   — sum of TF·IDF over the sentence's distinct terms
* normalized   — cumulative divided by the sentence's term count
* composite    — lambda1·normalized + lambda2·length, lambda1 + lambda2 = 1

IDF is ``ln(N / (1 + df))`` verbatim, which goes negative for terms present
in (nearly) every sentence.  That is deliberate: negativity down-weights
ubiquitous terms, and flooring it would change rankings.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import DegenerateDocument, UnknownTerm, ZeroLengthSentence
from .segmentation import Document, Sentence

_LAMBDA_SUM_TOL = 1e-12


@dataclass(frozen=True)
class LambdaWeights:
    """Weight pair trading term rarity (lambda1) against length (lambda2)."""

    lambda1: float
    lambda2: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.lambda1 <= 1.0 and 0.0 <= self.lambda2 <= 1.0):
            raise ValueError("lambda weights must lie in [0, 1]")
        if abs(self.lambda1 + self.lambda2 - 1.0) > _LAMBDA_SUM_TOL:
            raise ValueError("lambda1 + lambda2 must equal 1")

    @classmethod
    def from_lambda1(cls, lambda1: float) -> "LambdaWeights":
        """Derive lambda2 as 1 - lambda1, making the sum constraint unviolable."""
        return cls(lambda1, 1.0 - lambda1)


DEFAULT_WEIGHTS = LambdaWeights(0.5, 0.5)


@dataclass(frozen=True)
class TermIndex:
    """Per-document term statistics.

    ``sentence_frequency[t]`` counts sentences containing t (each sentence
    at most once), and ``idf[t] == ln(sentence_count / (1 + sf[t]))`` for
    exactly the same term domain.  Immutable by contract: the dicts are
    never mutated after construction and the index may be shared across
    threads.
    """

    sentence_count: int
    sentence_frequency: dict[str, int]
    idf: dict[str, float]


@dataclass(frozen=True)
class SentenceScore:
    """The score bundle for one sentence.

    ``length`` counts post-stopword terms, the same population that feeds
    the TF denominator.  ``normalized`` is 0 for term-empty sentences.
    """

    index: int
    cumulative: float
    length: int
    normalized: float
    composite: float


def build_term_index(doc: Document) -> TermIndex:
    """Count sentence frequencies and compute IDF for every document term.

    N includes token-empty sentences; they hold their position in the
    article even though they contribute no terms.
    """
    n = len(doc.sentences)
    if n == 0:
        raise DegenerateDocument(doc.id)
    sentence_frequency: dict[str, int] = {}
    for sentence in doc.sentences:
        for term in set(sentence.terms):
            sentence_frequency[term] = sentence_frequency.get(term, 0) + 1
    idf = {
        term: math.log(n / (1 + df)) for term, df in sentence_frequency.items()
    }
    return TermIndex(sentence_count=n, sentence_frequency=sentence_frequency, idf=idf)


def term_frequency(term: str, sentence: Sentence) -> float:
    """Occurrences of ``term`` in the sentence over its total term count.

    Raises :class:`ZeroLengthSentence` for term-empty sentences; callers
    must special-case those (``score_sentence`` never gets here for them).
    """
    total = len(sentence.terms)
    if total == 0:
        raise ZeroLengthSentence(
            f"sentence {sentence.index} has no terms; TF is undefined"
        )
    return sentence.terms.count(term) / total


def score_sentence(
    sentence: Sentence,
    index: TermIndex,
    weights: LambdaWeights = DEFAULT_WEIGHTS,
    length_scale: float = 1.0,
) -> SentenceScore:
    """Aggregate TF·IDF over the sentence's distinct terms.

    Summation is over distinct terms: TF already folds repeat occurrences
    into its numerator, so iterating per occurrence would double-count.
    ``length_scale`` rescales the length component of the composite score
    (1.0 keeps the raw term count).

    Raises :class:`UnknownTerm` if a term is missing from ``index``, which
    means the index was built from some other document.
    """
    total = len(sentence.terms)
    if total == 0:
        return SentenceScore(
            index=sentence.index, cumulative=0.0, length=0, normalized=0.0,
            composite=0.0,
        )
    idf = index.idf
    cumulative = 0.0
    for term, count in Counter(sentence.terms).items():
        term_idf = idf.get(term)
        if term_idf is None:
            raise UnknownTerm(term, sentence.index)
        cumulative += (count / total) * term_idf
    normalized = cumulative / total
    composite = weights.lambda1 * normalized + weights.lambda2 * (total * length_scale)
    return SentenceScore(
        index=sentence.index, cumulative=cumulative, length=total,
        normalized=normalized, composite=composite,
    )


def composite_score(score: SentenceScore, weights: LambdaWeights) -> float:
    """Weighted blend of normalized score and raw term count."""
    return weights.lambda1 * score.normalized + weights.lambda2 * score.length


def score_document(
    doc: Document,
    weights: LambdaWeights = DEFAULT_WEIGHTS,
    rescale_length: bool = False,
) -> list[SentenceScore]:
    """Score every sentence; output is index-aligned with ``doc.sentences``.

    With ``rescale_length`` the composite's length component is divided by
    the document's maximum sentence term count, putting it on [0, 1] and
    on the same footing as the normalized score.  Off by default: the raw
    formula is the reference behavior.
    """
    index = build_term_index(doc)
    length_scale = 1.0
    if rescale_length:
        max_length = max(len(s.terms) for s in doc.sentences)
        length_scale = 1.0 / max_length if max_length > 0 else 0.0
    return [
        score_sentence(sentence, index, weights, length_scale)
        for sentence in doc.sentences
    ]
