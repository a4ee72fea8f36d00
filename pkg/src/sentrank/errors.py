"""Exception types shared across the toolkit."""

from __future__ import annotations


class SentrankError(Exception):
    """Base class for all toolkit errors."""


class DegenerateDocument(SentrankError):
    """Raised when a document yields zero sentences."""

    def __init__(self, doc_id: str, reason: str = "document produced zero sentences"):
        self.doc_id = doc_id
        super().__init__(f"document {doc_id!r}: {reason}")


class ZeroLengthSentence(SentrankError):
    """Raised when a term frequency is requested for a sentence with no terms."""


class UnknownTerm(SentrankError):
    """Raised when a sentence term is missing from the term index.

    Signals that the index was built from a different document than the
    sentence being scored.
    """

    def __init__(self, term: str, sentence_index: int):
        self.term = term
        self.sentence_index = sentence_index
        super().__init__(
            f"term {term!r} in sentence {sentence_index} is absent from the index"
        )


class MalformedLine(SentrankError):
    """Raised for an unparseable or invalid corpus line."""

    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}")


class DuplicateId(SentrankError):
    """Raised when two corpus records share an id."""

    def __init__(self, doc_id: str, line_number: int):
        self.doc_id = doc_id
        self.line_number = line_number
        super().__init__(f"line {line_number}: duplicate id {doc_id!r}")
