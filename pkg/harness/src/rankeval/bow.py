"""Reference bag-of-words keyword classifier.

Counts class-keyword token hits in each text and answers the best-scoring
class; texts with no hits fall back to a fixed default label.  Usable as a
library or, via ``python -m rankeval.bow``, as a subprocess-protocol
classifier for the harness.
"""

from __future__ import annotations

import argparse
import re
import sys
from collections import Counter
from typing import Mapping, Sequence

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


class BagOfWordsClassifier:
    def __init__(self, keywords: Mapping[str, Sequence[str] | str],
                 fallback: str | None = None):
        if not keywords:
            raise ValueError("at least one class keyword is required")
        self.keywords = {
            label: frozenset([words.casefold()] if isinstance(words, str)
                             else [w.casefold() for w in words])
            for label, words in keywords.items()
        }
        self.fallback = fallback if fallback is not None else sorted(self.keywords)[0]

    def classify_one(self, text: str) -> str:
        tokens = Counter(t.casefold() for t in _TOKEN_RE.findall(text))
        best_label, best_hits = self.fallback, 0
        for label in sorted(self.keywords):
            hits = sum(tokens[w] for w in self.keywords[label])
            if hits > best_hits:
                best_label, best_hits = label, hits
        return best_label

    def classify(self, texts: Sequence[str]) -> list[str]:
        return [self.classify_one(text) for text in texts]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="rankeval.bow",
        description="Line-protocol keyword classifier: one text per stdin "
                    "line, one label per stdout line.",
    )
    parser.add_argument(
        "--keywords", action="append", required=True, metavar="LABEL=WORD[,WORD...]",
        help="class keyword spec; repeatable",
    )
    parser.add_argument("--fallback", default=None,
                        help="label for texts without keyword hits "
                             "(default: first label, sorted)")
    args = parser.parse_args(argv)
    keywords: dict[str, list[str]] = {}
    for spec in args.keywords:
        label, sep, words = spec.partition("=")
        if not sep or not label or not words:
            parser.error(f"bad --keywords spec {spec!r}")
        keywords[label] = words.split(",")
    classifier = BagOfWordsClassifier(keywords, fallback=args.fallback)
    for line in sys.stdin:
        print(classifier.classify_one(line.rstrip("\n")))
    return 0


if __name__ == "__main__":
    sys.exit(main())
