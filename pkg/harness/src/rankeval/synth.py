"""Synthetic planted-keyword corpus generation.

A desk-scale stand-in for a labeled news corpus: every document carries its
class keyword in exactly one sentence (at a seeded random position), while
all other sentences draw from a small noise vocabulary shared across
classes.  Because noise words repeat across sentences within a document,
their per-document IDF stays low and the keyword sentence dominates
TF-IDF-based rankings; the generator therefore knows the right answer for
every document and acts as its own oracle.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Mapping, Sequence

DEFAULT_NOISE_VOCAB = tuple("mela tara pani ghar vara shet rasta nadi".split())

DEFAULT_CLASS_KEYWORDS = {
    "culture": "sanskruti",
    "economy": "arthik",
    "politics": "rajkaran",
    "sports": "krida",
}


@dataclass(frozen=True)
class PlantedDoc:
    """Ground truth for one generated document."""

    id: str
    label: str
    planted_index: int


def make_synthetic_corpus(
    n_docs: int,
    n_sentences: int,
    noise_vocab: Sequence[str] = DEFAULT_NOISE_VOCAB,
    class_keywords: Mapping[str, str] = DEFAULT_CLASS_KEYWORDS,
    seed: int = 0,
    *,
    out: IO[bytes] | str | Path,
    noise_tokens: int = 8,
    planted_tokens: int = 3,
) -> list[PlantedDoc]:
    """Write a labeled corpus file and return its ground truth.

    Classes cycle evenly over documents.  The planted sentence is shorter
    than the noise sentences (``planted_tokens`` vs ``noise_tokens``),
    which concentrates the keyword's term-frequency mass.
    """
    if n_docs < 1 or n_sentences < 1:
        raise ValueError("n_docs and n_sentences must be positive")
    if planted_tokens < 1 or noise_tokens < 1:
        raise ValueError("token counts must be positive")
    overlap = set(noise_vocab) & set(class_keywords.values())
    if overlap:
        raise ValueError(f"keywords must not appear in the noise vocab: {overlap}")

    rng = random.Random(seed)
    labels = sorted(class_keywords)
    truth: list[PlantedDoc] = []

    def generate(stream: IO[bytes]) -> None:
        for i in range(n_docs):
            label = labels[i % len(labels)]
            planted_at = rng.randrange(n_sentences)
            sentences = []
            for s in range(n_sentences):
                if s == planted_at:
                    words = [class_keywords[label]] + [
                        rng.choice(noise_vocab) for _ in range(planted_tokens - 1)
                    ]
                else:
                    words = [rng.choice(noise_vocab) for _ in range(noise_tokens)]
                sentences.append(" ".join(words) + ".")
            doc_id = f"doc{i:05d}"
            record = {"id": doc_id, "text": " ".join(sentences), "label": label}
            stream.write(json.dumps(record, ensure_ascii=False).encode("utf-8") + b"\n")
            truth.append(PlantedDoc(id=doc_id, label=label, planted_index=planted_at))

    if isinstance(out, (str, Path)):
        with open(out, "wb") as stream:
            generate(stream)
    else:
        generate(out)
    return truth


def write_truth(truth: list[PlantedDoc], out: IO[bytes] | str | Path) -> None:
    """Persist ground truth as JSON lines (id, label, planted_index)."""

    def generate(stream: IO[bytes]) -> None:
        for doc in truth:
            obj = {"id": doc.id, "label": doc.label, "planted_index": doc.planted_index}
            stream.write(json.dumps(obj).encode("utf-8") + b"\n")

    if isinstance(out, (str, Path)):
        with open(out, "wb") as stream:
            generate(stream)
    else:
        generate(out)
