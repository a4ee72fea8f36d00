"""Harness CLI: generate synthetic corpora and evaluate reduced ones.

Exit codes: 0 success, 1 usage error, 2 input/adapter error, 3 internal.
"""

from __future__ import annotations

import argparse
import shlex
import sys

from .adapters import HTTPAdapter, SubprocessAdapter
from .errors import RankevalError
from .evaluate import EvalConfig, ReductionFile, run_eval
from .report import render_report
from .synth import (
    DEFAULT_CLASS_KEYWORDS,
    DEFAULT_NOISE_VOCAB,
    make_synthetic_corpus,
    write_truth,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A002 - argparse API
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_keywords(specs, parser) -> dict[str, str]:
    if not specs:
        return dict(DEFAULT_CLASS_KEYWORDS)
    keywords = {}
    for spec in specs:
        label, sep, word = spec.partition("=")
        if not sep or not label or not word:
            parser.error(f"bad --keywords spec {spec!r}, expected LABEL=WORD")
        keywords[label] = word
    return keywords


def cmd_synth(args, parser) -> int:
    keywords = _parse_keywords(args.keywords, parser)
    noise_vocab = (
        tuple(args.noise_vocab.split(",")) if args.noise_vocab else DEFAULT_NOISE_VOCAB
    )
    try:
        truth = make_synthetic_corpus(
            args.docs,
            args.sentences,
            noise_vocab,
            keywords,
            args.seed,
            out=args.output,
            noise_tokens=args.noise_tokens,
            planted_tokens=args.planted_tokens,
        )
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")
    if args.truth_output:
        write_truth(truth, args.truth_output)
    print(f"wrote {len(truth)} documents to {args.output}", file=sys.stderr)
    return EXIT_OK


def cmd_run(args, parser) -> int:
    if args.adapter_cmd:
        adapter = SubprocessAdapter(shlex.split(args.adapter_cmd))
    else:
        adapter = HTTPAdapter(args.adapter_url, max_workers=args.workers)
    files = [ReductionFile(path=path) for path in args.reductions]
    report = run_eval(
        EvalConfig(adapter=adapter, files=files, repetitions=args.repetitions)
    )
    payload = render_report(report, args.format)
    if args.output == "-":
        sys.stdout.buffer.write(payload)
    else:
        with open(args.output, "wb") as fh:
            fh.write(payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rankeval",
        description="Evaluate a short-text classifier over sentence-reduced "
                    "corpora and tabulate accuracy/latency per strategy and level.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    synth_p = subparsers.add_parser(
        "synth", help="generate a planted-keyword synthetic corpus"
    )
    synth_p.add_argument("--output", required=True, metavar="PATH")
    synth_p.add_argument("--docs", type=int, default=500)
    synth_p.add_argument("--sentences", type=int, default=10)
    synth_p.add_argument("--seed", type=int, default=0)
    synth_p.add_argument("--noise-vocab", metavar="W1,W2,...",
                         help="comma-separated noise words")
    synth_p.add_argument("--keywords", action="append", metavar="LABEL=WORD",
                         help="class keyword; repeatable")
    synth_p.add_argument("--noise-tokens", type=int, default=8)
    synth_p.add_argument("--planted-tokens", type=int, default=3)
    synth_p.add_argument("--truth-output", metavar="PATH",
                         help="also write ground truth (id, label, planted_index)")
    synth_p.set_defaults(func=cmd_synth)

    run_p = subparsers.add_parser(
        "run", help="classify reduced corpora and report accuracy per config"
    )
    run_p.add_argument("--reductions", action="append", required=True, metavar="PATH",
                       help="reducer output file; repeatable")
    adapter = run_p.add_mutually_exclusive_group(required=True)
    adapter.add_argument("--adapter-cmd", metavar="CMD",
                         help="subprocess classifier command (line protocol)")
    adapter.add_argument("--adapter-url", metavar="URL",
                         help="HTTP classifier endpoint (POST text, receive label)")
    run_p.add_argument("--workers", type=int, default=1,
                       help="parallel HTTP requests (default 1)")
    run_p.add_argument("--repetitions", type=int, default=1,
                       help="timed passes per file; median reported")
    run_p.add_argument("--format", choices=("table", "csv", "markdown"),
                       default="table")
    run_p.add_argument("--output", default="-", metavar="PATH")
    run_p.set_defaults(func=cmd_run)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except RankevalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
