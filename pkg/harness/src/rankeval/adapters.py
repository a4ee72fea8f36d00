"""Classifier adapters: the harness never embeds a model.

Two transports are supported, both documented bit-exactly in the README:

Subprocess line protocol
    The command is spawned once per batch.  stdin receives one UTF-8 text
    per line (LF-terminated; any newline inside a text is replaced by a
    space).  stdout must answer with exactly one label per line, in input
    order, and the process must exit 0.

HTTP protocol
    Each text is POSTed as a ``text/plain; charset=utf-8`` body; the
    response body is the label string.  Requests may run bounded-parallel;
    response order is restored to input order.
"""

from __future__ import annotations

import subprocess
import urllib.error
import urllib.request
from concurrent.futures import ThreadPoolExecutor
from typing import Protocol, Sequence

from .errors import AdapterFailure


class ClassifierAdapter(Protocol):
    def classify(self, texts: Sequence[str]) -> list[str]:
        """Return one label per input text, in order."""


def _flatten(text: str) -> str:
    return " ".join(text.splitlines()) if "\n" in text else text


class SubprocessAdapter:
    """Line-protocol adapter around an external command."""

    def __init__(self, command: Sequence[str], timeout: float = 300.0):
        if not command:
            raise ValueError("adapter command must be non-empty")
        self.command = list(command)
        self.timeout = timeout

    def classify(self, texts: Sequence[str]) -> list[str]:
        payload = "".join(_flatten(text) + "\n" for text in texts)
        try:
            proc = subprocess.run(
                self.command,
                input=payload.encode("utf-8"),
                capture_output=True,
                timeout=self.timeout,
            )
        except OSError as exc:
            raise AdapterFailure(f"cannot spawn {self.command[0]!r}: {exc}") from exc
        except subprocess.TimeoutExpired as exc:
            raise AdapterFailure(f"timed out after {self.timeout}s") from exc
        if proc.returncode != 0:
            stderr = proc.stderr.decode("utf-8", "replace").strip()
            raise AdapterFailure(
                f"exit code {proc.returncode}" + (f": {stderr}" if stderr else "")
            )
        labels = proc.stdout.decode("utf-8").splitlines()
        if len(labels) != len(texts):
            raise AdapterFailure(
                f"answered {len(labels)} labels for {len(texts)} texts"
            )
        cleaned = []
        for i, label in enumerate(labels):
            label = label.strip()
            if not label:
                raise AdapterFailure("empty label", record_id=str(i))
            cleaned.append(label)
        return cleaned


class HTTPAdapter:
    """POST-per-text adapter; ``max_workers`` > 1 enables bounded parallelism."""

    def __init__(self, url: str, timeout: float = 30.0, max_workers: int = 1):
        self.url = url
        self.timeout = timeout
        self.max_workers = max(1, max_workers)

    def _post_one(self, text: str) -> str:
        request = urllib.request.Request(
            self.url,
            data=_flatten(text).encode("utf-8"),
            headers={"Content-Type": "text/plain; charset=utf-8"},
            method="POST",
        )
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as response:
                label = response.read().decode("utf-8").strip()
        except (urllib.error.URLError, OSError) as exc:
            raise AdapterFailure(f"HTTP request failed: {exc}") from exc
        if not label:
            raise AdapterFailure("empty label in HTTP response")
        return label

    def classify(self, texts: Sequence[str]) -> list[str]:
        if self.max_workers == 1:
            return [self._post_one(text) for text in texts]
        with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
            # map() yields results in submission order regardless of
            # completion order.
            return list(pool.map(self._post_one, texts))
