"""Sentence segmentation, tokenization, and stopword filtering.

Raw article text is normalized (NFC), whitespace-collapsed, and split into
sentences at terminator codepoints (danda, double danda, '.', '?', '!' by
default).  Each sentence keeps its raw span plus two token views: all word
tokens, and the terms that survive stopword filtering.

Everything here is a pure function over immutable inputs; Documents are
frozen after construction and safe to share across threads.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from pathlib import Path

from .errors import DegenerateDocument

# Danda and double danda close sentences in Devanagari prose; the Latin
# terminators cover mixed-script news text.
DEFAULT_TERMINATORS = frozenset({"।", "॥", ".", "?", "!"})

# Joiner used when sentence spans are reassembled into a single string.
SENTENCE_JOINER = " "


@dataclass(frozen=True)
class SegmentationRules:
    """Configuration for splitting, tokenizing, and filtering text.

    ``terminators`` are the codepoints that end a sentence.  ``stopwords``
    must already be normalized the same way input tokens are (see
    :func:`load_stopwords`).  ``lowercase_fold`` case-folds tokens so that
    stopword matching and term statistics are case-insensitive.
    """

    terminators: frozenset[str] = DEFAULT_TERMINATORS
    stopwords: frozenset[str] = frozenset()
    lowercase_fold: bool = True

    def __post_init__(self) -> None:
        if not self.terminators:
            raise ValueError("terminator set must be non-empty")


DEFAULT_RULES = SegmentationRules()


@dataclass(frozen=True)
class Sentence:
    """A positioned sentence span with its normalized token views."""

    index: int
    text: str
    tokens: tuple[str, ...]
    terms: tuple[str, ...]


@dataclass(frozen=True)
class Document:
    """An ordered sequence of sentences plus the original text.

    ``sentences[i].index == i`` for all i, and joining the sentence texts
    with :data:`SENTENCE_JOINER` reconstructs the whitespace-normalized
    segmentable content of ``raw_text``.
    """

    id: str
    raw_text: str
    sentences: tuple[Sentence, ...]
    label: str | None = None


_TOKEN_CHAR_CACHE: dict[str, bool] = {}


def _is_token_char(ch: str) -> bool:
    # Letters, combining marks, and decimal digits form tokens.  Marks are
    # required for Indic scripts: Devanagari dependent vowels and virama are
    # category Mc/Mn, and dropping them would shred words like "मराठी".
    cached = _TOKEN_CHAR_CACHE.get(ch)
    if cached is None:
        cat = unicodedata.category(ch)
        cached = cat[0] in ("L", "M") or cat == "Nd"
        _TOKEN_CHAR_CACHE[ch] = cached
    return cached


def _nfc(text: str) -> str:
    # Devanagari has multiple byte encodings for identical glyph sequences.
    if unicodedata.is_normalized("NFC", text):
        return text
    return unicodedata.normalize("NFC", text)


def segment(raw_text: str, rules: SegmentationRules = DEFAULT_RULES) -> list[str]:
    """Split raw text into ordered sentence spans.

    A boundary is a maximal run of terminator codepoints followed by
    whitespace or end of text; the run stays attached to its sentence.
    Whitespace is collapsed before scanning, so spans never contain runs of
    blanks and the joiner-concatenation of the result reproduces the
    whitespace-normalized input exactly.  Empty input yields an empty list.
    """
    text = SENTENCE_JOINER.join(_nfc(raw_text).split())
    if not text:
        return []

    terminators = rules.terminators
    spans: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in terminators:
            j = i
            while j < n and text[j] in terminators:
                j += 1
            if j >= n or text[j] == " ":
                span = text[start:j].strip()
                if span:
                    spans.append(span)
                start = j + 1
                i = j + 1
            else:
                # Terminator glued to the next word ("a.b") is not a boundary.
                i = j
        else:
            i += 1
    if start < n:
        span = text[start:].strip()
        if span:
            spans.append(span)
    return spans


def tokenize(sentence_text: str, rules: SegmentationRules = DEFAULT_RULES) -> list[str]:
    """Extract word tokens: maximal runs of letter/mark/digit codepoints.

    Punctuation and whitespace are discarded.  Tokens are case-folded when
    ``rules.lowercase_fold`` is set.
    """
    text = _nfc(sentence_text)
    if rules.lowercase_fold:
        text = text.casefold()
    tokens: list[str] = []
    buf: list[str] = []
    for ch in text:
        if _is_token_char(ch):
            buf.append(ch)
        elif buf:
            tokens.append("".join(buf))
            buf.clear()
    if buf:
        tokens.append("".join(buf))
    return tokens


def filter_stopwords(
    tokens: list[str], rules: SegmentationRules = DEFAULT_RULES
) -> list[str]:
    """Drop stopword tokens, preserving the order of the survivors."""
    if not rules.stopwords:
        return list(tokens)
    stopwords = rules.stopwords
    return [t for t in tokens if t not in stopwords]


def build_document(
    doc_id: str,
    raw_text: str,
    label: str | None = None,
    rules: SegmentationRules = DEFAULT_RULES,
) -> Document:
    """Segment and tokenize raw text into an immutable Document.

    Sentences whose token list comes out empty (pure punctuation, or all
    stopwords) are retained: they count toward the sentence total and stay
    visible to positional selection, but contribute nothing to any score.

    Raises :class:`DegenerateDocument` when the text yields no sentences.
    """
    spans = segment(raw_text, rules)
    if not spans:
        raise DegenerateDocument(doc_id)
    sentences = []
    for index, span in enumerate(spans):
        tokens = tuple(tokenize(span, rules))
        terms = tuple(filter_stopwords(list(tokens), rules))
        sentences.append(Sentence(index=index, text=span, tokens=tokens, terms=terms))
    return Document(id=doc_id, raw_text=raw_text, sentences=tuple(sentences), label=label)


def load_stopwords(path: str | Path, lowercase_fold: bool = True) -> frozenset[str]:
    """Read a stopword file: UTF-8, one token per line, '#' comments.

    Each entry is normalized exactly like input text (NFC, then case-fold
    when ``lowercase_fold`` is set) so membership tests line up with the
    tokens produced by :func:`tokenize`.
    """
    words: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            entry = line.strip()
            if not entry or entry.startswith("#"):
                continue
            entry = _nfc(entry)
            if lowercase_fold:
                entry = entry.casefold()
            words.add(entry)
    return frozenset(words)
