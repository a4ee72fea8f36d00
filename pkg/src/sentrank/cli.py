"""Command-line entry points: reduce, score, stats, bench.

Exit codes: 0 success, 1 usage error, 2 input error, 3 internal error.
Diagnostics go to stderr; data goes to the output file or stdout only.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from contextlib import ExitStack
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import IO

from . import __version__
from .bench import emit_report, run_bench
from .corpus_io import HEADER_PREFIX, corpus_stats, read_corpus, write_reductions
from .errors import SentrankError
from .scoring import LambdaWeights, score_document
from .segmentation import SegmentationRules, load_stopwords
from .selection import (
    MODES,
    SCORE_STRATEGIES,
    STRATEGIES,
    SelectionConfig,
    rank_order,
    reduce_corpus,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; we reserve 2 for
    input errors, so remap to 1."""

    def error(self, message):  # noqa: A002 - argparse API
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunManifest:
    """Resolved run configuration, echoed into output headers."""

    command: str
    version: str
    input: str
    output: str
    stopwords: str | None
    stopwords_digest: str | None
    on_malformed: str
    on_degenerate: str
    timestamp: str

    def to_obj(self) -> dict[str, object]:
        return {
            "command": self.command,
            "version": self.version,
            "input": self.input,
            "output": self.output,
            "stopwords": self.stopwords,
            "stopwords_digest": self.stopwords_digest,
            "on_malformed": self.on_malformed,
            "on_degenerate": self.on_degenerate,
            "timestamp": self.timestamp,
        }


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _file_digest(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _build_rules(args) -> tuple[SegmentationRules, str | None]:
    if getattr(args, "no_stopwords", False) or not getattr(args, "stopwords", None):
        return SegmentationRules(), None
    stopwords = load_stopwords(args.stopwords)
    return SegmentationRules(stopwords=stopwords), _file_digest(args.stopwords)


def _build_manifest(command: str, args, digest: str | None) -> RunManifest:
    return RunManifest(
        command=command,
        version=__version__,
        input=args.input,
        output=args.output,
        stopwords=None if getattr(args, "no_stopwords", False) else args.stopwords,
        stopwords_digest=digest,
        on_malformed=args.on_malformed,
        on_degenerate=args.on_degenerate,
        timestamp=_now(),
    )


def _open_input(path: str, stack: ExitStack) -> IO[bytes]:
    if path == "-":
        return sys.stdin.buffer
    return stack.enter_context(open(path, "rb"))


def _open_output(path: str, stack: ExitStack) -> IO[bytes]:
    if path == "-":
        return sys.stdout.buffer
    return stack.enter_context(open(path, "wb"))


def _add_io_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, metavar="PATH",
                        help="input corpus (one JSON record per line); '-' for stdin")
    parser.add_argument("--output", default="-", metavar="PATH",
                        help="output path; '-' (default) for stdout")


def _add_rules_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--stopwords", metavar="PATH",
                       help="stopword file: UTF-8, one token per line, '#' comments")
    group.add_argument("--no-stopwords", action="store_true",
                       help="disable stopword filtering (terms = tokens)")


def _add_policy_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--on-malformed", choices=("abort", "skip"), default="abort",
                        help="what to do with unparseable corpus lines")
    parser.add_argument("--on-degenerate", choices=("abort", "skip"), default="abort",
                        help="what to do with documents that yield no sentences")


def _add_lambda_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lambda1", type=float, default=0.5, metavar="W",
                        help="weight of the normalized score in the composite; "
                             "lambda2 is derived as 1 - lambda1 (default 0.5)")
    parser.add_argument("--rescale-length", action="store_true",
                        help="rescale the composite's length term to [0,1] by the "
                             "document's maximum sentence length")


def _selection_config(args, parser: argparse.ArgumentParser) -> SelectionConfig:
    try:
        weights = LambdaWeights.from_lambda1(args.lambda1)
        return SelectionConfig(
            strategy=args.strategy,
            mode=args.mode,
            k=args.k,
            percent=args.percent,
            weights=weights,
            seed=args.seed,
            rescale_length=args.rescale_length,
        )
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")


def cmd_reduce(args, parser: argparse.ArgumentParser) -> int:
    rules, digest = _build_rules(args)
    config = _selection_config(args, parser)
    manifest = _build_manifest("reduce", args, digest)
    if args.print_manifest:
        print(json.dumps(manifest.to_obj(), ensure_ascii=False), file=sys.stderr)
    with ExitStack() as stack:
        in_stream = _open_input(args.input, stack)
        out_stream = _open_output(args.output, stack)
        docs = read_corpus(
            in_stream, rules,
            on_malformed=args.on_malformed,
            on_degenerate=args.on_degenerate,
        )
        count = write_reductions(
            reduce_corpus(docs, config), config, out_stream,
            provenance=manifest.to_obj(),
        )
    print(f"reduced {count} documents", file=sys.stderr)
    return EXIT_OK


def cmd_score(args, parser: argparse.ArgumentParser) -> int:
    rules, digest = _build_rules(args)
    try:
        weights = LambdaWeights.from_lambda1(args.lambda1)
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")
    manifest = _build_manifest("score", args, digest)
    header = {
        "lambda1": weights.lambda1,
        "lambda2": weights.lambda2,
        "rescale_length": args.rescale_length,
    }
    header.update(manifest.to_obj())
    rank_configs = {
        strategy: SelectionConfig(strategy=strategy, mode="percent", percent=100)
        for strategy in sorted(SCORE_STRATEGIES)
    }
    count = 0
    with ExitStack() as stack:
        in_stream = _open_input(args.input, stack)
        out_stream = _open_output(args.output, stack)
        out_stream.write(
            HEADER_PREFIX.encode("utf-8")
            + json.dumps(header, ensure_ascii=False).encode("utf-8") + b"\n"
        )
        docs = read_corpus(
            in_stream, rules,
            on_malformed=args.on_malformed,
            on_degenerate=args.on_degenerate,
        )
        for doc in docs:
            scores = score_document(doc, weights, args.rescale_length)
            positions: dict[str, list[int]] = {}
            for strategy, config in rank_configs.items():
                order = rank_order(scores, strategy, config)
                pos = [0] * len(order)
                for rank, idx in enumerate(order):
                    pos[idx] = rank
                positions[strategy] = pos
            for score in scores:
                obj = {
                    "id": doc.id,
                    "index": score.index,
                    "length": score.length,
                    "cumulative": score.cumulative,
                    "normalized": score.normalized,
                    "composite": score.composite,
                    "ranks": {
                        strategy: positions[strategy][score.index]
                        for strategy in rank_configs
                    },
                }
                out_stream.write(
                    json.dumps(obj, ensure_ascii=False).encode("utf-8") + b"\n"
                )
            count += 1
    print(f"scored {count} documents", file=sys.stderr)
    return EXIT_OK


def cmd_stats(args, parser: argparse.ArgumentParser) -> int:
    rules, _ = _build_rules(args)
    with ExitStack() as stack:
        in_stream = _open_input(args.input, stack)
        out_stream = _open_output(args.output, stack)
        docs = read_corpus(
            in_stream, rules,
            on_malformed=args.on_malformed,
            on_degenerate=args.on_degenerate,
        )
        stats = corpus_stats(docs)
        if args.format == "json":
            out_stream.write(
                json.dumps(stats.to_obj(), ensure_ascii=False).encode("utf-8") + b"\n"
            )
        else:
            lines = [f"documents  {stats.doc_count}"]
            for name, dist in (("sentences", stats.sentences), ("tokens", stats.tokens)):
                if dist is None:
                    lines.append(f"{name:<10} (empty corpus)")
                else:
                    lines.append(
                        f"{name:<10} min {dist.min}  median {dist.median:g}  "
                        f"mean {dist.mean:.2f}  max {dist.max}"
                    )
            out_stream.write(("\n".join(lines) + "\n").encode("utf-8"))
    return EXIT_OK


def _parse_grid(spec: str) -> list[tuple[str, str, int]]:
    """Expand 'STRATEGY[,STRATEGY...]:MODE:LEVEL[,LEVEL...]' into a config grid."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(
            f"bad grid {spec!r}: expected STRATEGIES:MODE:LEVELS, "
            "e.g. 'ranked,random:percent:25,50,75,100'"
        )
    strategies = [s.strip() for s in parts[0].split(",") if s.strip()]
    mode = parts[1].strip()
    try:
        levels = [int(level) for level in parts[2].split(",")]
    except ValueError:
        raise ValueError(f"bad grid {spec!r}: levels must be integers") from None
    if not strategies or not levels:
        raise ValueError(f"bad grid {spec!r}: empty strategy or level list")
    return [(strategy, mode, level) for strategy in strategies for level in levels]


def cmd_bench(args, parser: argparse.ArgumentParser) -> int:
    rules, _ = _build_rules(args)
    grid_specs = args.configs or ["ranked:percent:25,50,75,100"]
    try:
        weights = LambdaWeights.from_lambda1(args.lambda1)
        configs = [
            SelectionConfig(
                strategy=strategy,
                mode=mode,
                k=level if mode == "fixed" else None,
                percent=level if mode == "percent" else None,
                weights=weights,
                seed=args.seed if strategy == "random" else None,
                rescale_length=args.rescale_length,
            )
            for spec in grid_specs
            for strategy, mode, level in _parse_grid(spec)
        ]
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")
    with ExitStack() as stack:
        in_stream = _open_input(args.input, stack)
        out_stream = _open_output(args.output, stack)
        # Parse the whole corpus before the clock starts; the bench times
        # the reduction stage only.
        docs = list(
            read_corpus(
                in_stream, rules,
                on_malformed=args.on_malformed,
                on_degenerate=args.on_degenerate,
            )
        )
        report = run_bench(docs, configs, args.repetitions, args.workers)
        out_stream.write(emit_report(report, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sentrank",
        description="Rank sentences by per-document TF-IDF and reduce long "
                    "documents to short, information-dense inputs.",
    )
    parser.add_argument("--version", action="version", version=f"sentrank {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    reduce_p = subparsers.add_parser("reduce", help="select sentences and write a reduced corpus")
    _add_io_arguments(reduce_p)
    reduce_p.add_argument("--strategy", choices=STRATEGIES, default="ranked")
    reduce_p.add_argument("--mode", choices=MODES, default="percent")
    reduce_p.add_argument("--k", type=int, default=None, metavar="N",
                          help="sentences to keep in fixed mode")
    reduce_p.add_argument("--percent", type=int, default=50, metavar="P",
                          help="percentage to keep in percent mode (default 50)")
    _add_lambda_arguments(reduce_p)
    reduce_p.add_argument("--seed", type=int, default=None,
                          help="PRNG seed; required for the random strategy")
    _add_rules_arguments(reduce_p)
    _add_policy_arguments(reduce_p)
    reduce_p.add_argument("--print-manifest", action="store_true",
                          help="print the run manifest to stderr")
    reduce_p.set_defaults(func=cmd_reduce)

    score_p = subparsers.add_parser("score", help="emit per-sentence scores and ranks")
    _add_io_arguments(score_p)
    _add_lambda_arguments(score_p)
    _add_rules_arguments(score_p)
    _add_policy_arguments(score_p)
    score_p.set_defaults(func=cmd_score)

    stats_p = subparsers.add_parser("stats", help="summarize corpus sentence/token counts")
    _add_io_arguments(stats_p)
    stats_p.add_argument("--format", choices=("table", "json"), default="table")
    _add_rules_arguments(stats_p)
    _add_policy_arguments(stats_p)
    stats_p.set_defaults(func=cmd_stats)

    bench_p = subparsers.add_parser("bench", help="time the reduction stage across configs")
    _add_io_arguments(bench_p)
    bench_p.add_argument("--configs", action="append", metavar="GRID",
                         help="strategy/level grid: STRATEGIES:MODE:LEVELS, e.g. "
                              "'ranked,random:percent:25,50,75,100'; repeatable "
                              "(default 'ranked:percent:25,50,75,100')")
    bench_p.add_argument("--repetitions", type=int, default=3,
                         help="timed passes per configuration; median reported")
    bench_p.add_argument("--workers", type=int, default=1,
                         help="thread count for the reduction stage (default 1)")
    bench_p.add_argument("--format", choices=("table", "csv"), default="table")
    _add_lambda_arguments(bench_p)
    bench_p.add_argument("--seed", type=int, default=None,
                         help="PRNG seed for random-strategy grid entries")
    _add_rules_arguments(bench_p)
    _add_policy_arguments(bench_p)
    bench_p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except SentrankError as exc:
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
