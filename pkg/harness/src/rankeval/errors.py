"""Harness exception types."""


class RankevalError(Exception):
    """Base class for harness errors."""


class AdapterFailure(RankevalError):
    """The classifier adapter crashed, timed out, or answered malformed."""

    def __init__(self, reason: str, record_id: str | None = None):
        self.record_id = record_id
        where = f" (record {record_id!r})" if record_id else ""
        super().__init__(f"classifier adapter failure{where}: {reason}")


class MissingLabel(RankevalError):
    """A record consumed for evaluation carries no gold label."""

    def __init__(self, record_id: str):
        self.record_id = record_id
        super().__init__(f"record {record_id!r} has no gold label")
