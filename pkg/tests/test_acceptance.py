"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines
inline.
"""

import io
import itertools
import math
import random
import time

from _oracles import brute_scores
from _synth import FUZZ_VOCAB, fuzz_corpus_texts, planted_corpus
from sentrank import (
    SENTENCE_JOINER,
    SegmentationRules,
    SelectionConfig,
    SentenceScore,
    build_document,
    build_term_index,
    reduce_document,
    run_bench,
    score_document,
    select,
    write_reductions,
)

ALL_STRATEGIES = ("first", "last", "random", "ranked", "ranked-normalized", "composite")
DETERMINISTIC = ("first", "last", "ranked", "ranked-normalized", "composite")


def _verdict(name: str, passed: bool, detail: str = "") -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] {name}"
    if detail:
        line += f"  ({detail})"
    print(line, flush=True)
    assert passed, line


def _config(strategy, mode, level, seed=None):
    return SelectionConfig(
        strategy=strategy,
        mode=mode,
        k=level if mode == "fixed" else None,
        percent=level if mode == "percent" else None,
        seed=seed if strategy == "random" else None,
    )


def test_scoring_oracle_equivalence():
    """200 random docs (<=10 sentences, <=20 tokens, vocab 30) match the
    brute-force oracle within 1e-9, in under 10 seconds."""
    rng = random.Random(0xACCE97)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(200):
        term_lists = [
            [rng.choice(FUZZ_VOCAB) for _ in range(rng.randint(1, 20))]
            for _ in range(rng.randint(1, 10))
        ]
        text = " ".join(" ".join(terms) + "." for terms in term_lists)
        doc = build_document("fuzz", text)
        assert [list(s.terms) for s in doc.sentences] == term_lists
        got = score_document(doc)
        want = brute_scores(term_lists)
        for g, w in zip(got, want):
            worst = max(
                worst,
                abs(g.cumulative - w["cumulative"]),
                abs(g.normalized - w["normalized"]),
                abs(g.composite - w["composite"]),
            )
            assert g.length == w["length"]
    elapsed = time.perf_counter() - start
    _verdict(
        "scoring oracle equivalence (200 docs, 1e-9)",
        worst <= 1e-9 and elapsed < 10.0,
        f"max deviation {worst:.2e}, {elapsed:.2f}s",
    )


def test_formula_spot_checks():
    """Two-sentence worked example: idf(a) = ln(2/3), Score(S1) = -0.202733."""
    doc = build_document("worked", "a b. a c.")
    index = build_term_index(doc)
    scores = score_document(doc)
    ok = (
        abs(index.idf["a"] - math.log(2 / 3)) <= 1e-9
        and index.idf["b"] == 0.0
        and index.idf["c"] == 0.0
        and abs(scores[0].cumulative - (-0.20273255405408222)) <= 1e-9
        and abs(scores[0].cumulative - 0.5 * math.log(2 / 3)) <= 1e-9
        and abs(scores[0].normalized - 0.25 * math.log(2 / 3)) <= 1e-9
    )
    _verdict("formula spot-checks (idf(a)=ln(2/3), Score(S1)=-0.202733)", ok)


def test_identity_at_percent_100():
    """percent=100 reproduces every document verbatim for every strategy,
    on a 50-doc fuzz corpus."""
    texts = fuzz_corpus_texts(seed=0x1DE9, n_docs=50)
    checked = 0
    for i, text in enumerate(texts):
        doc = build_document(f"f{i}", text)
        full_text = SENTENCE_JOINER.join(s.text for s in doc.sentences)
        for strategy in ALL_STRATEGIES:
            config = _config(strategy, "percent", 100, seed=17)
            reduced = reduce_document(doc, config)
            assert reduced.selected_indices == tuple(range(len(doc.sentences)))
            assert reduced.reduced_text == full_text
            checked += 1
    _verdict("identity at percent=100 (all strategies)", True, f"{checked} reductions")


def _grid_scores(cumulative, lengths):
    scores = []
    for i, (cum, length) in enumerate(zip(cumulative, lengths)):
        normalized = cum / length
        scores.append(
            SentenceScore(index=i, cumulative=cum, length=length,
                          normalized=normalized,
                          composite=0.5 * normalized + 0.5 * length)
        )
    return scores


def _grid_doc(n):
    return build_document("grid", " ".join(f"tok{i} extra{i}." for i in range(n)))


def test_order_and_nesting():
    """selected_indices strictly increasing always; deterministic strategies
    nest across k and percent levels (exhaustive over score grids, n <= 6)."""
    grid = (0.0, 0.5, 1.0)
    length_pattern = (1, 2, 3, 1, 2, 1)
    checked = 0
    for n in range(1, 7):
        doc = _grid_doc(n)
        lengths = length_pattern[:n]
        for cumulative in itertools.product(grid, repeat=n):
            scores = _grid_scores(cumulative, lengths)
            for strategy in DETERMINISTIC:
                previous: set[int] = set()
                for k in range(1, n + 1):
                    reduced = select(doc, scores, _config(strategy, "fixed", k))
                    indices = reduced.selected_indices
                    assert all(a < b for a, b in zip(indices, indices[1:]))
                    assert previous <= set(indices)
                    previous = set(indices)
                    checked += 1
                previous = set()
                for percent in (25, 50, 75, 100):
                    reduced = select(doc, scores, _config(strategy, "percent", percent))
                    indices = reduced.selected_indices
                    assert all(a < b for a, b in zip(indices, indices[1:]))
                    assert previous <= set(indices)
                    previous = set(indices)
                    checked += 1
            # random: order property must hold too
            reduced = select(doc, scores, _config("random", "percent", 50, seed=5))
            indices = reduced.selected_indices
            assert all(a < b for a, b in zip(indices, indices[1:]))
            checked += 1
    _verdict("order preservation & nesting (exhaustive, n<=6)", True,
             f"{checked} selections")


def test_seed_determinism():
    """Equal seeds give byte-identical output; 10 seeds on a 10-sentence
    document produce at least two distinct selections."""
    doc = build_document(
        "r", " ".join(f"word{i} filler{i} pad{i}." for i in range(10))
    )
    payloads = []
    for _ in range(2):
        buf = io.BytesIO()
        config = _config("random", "percent", 50, seed=7)
        write_reductions([reduce_document(doc, config)], config, buf)
        payloads.append(buf.getvalue())
    identical = payloads[0] == payloads[1]
    selections = {
        reduce_document(doc, _config("random", "percent", 50, seed=s)).selected_indices
        for s in range(10)
    }
    _verdict(
        "seed determinism (byte-identical; seeds vary)",
        identical and len(selections) > 1,
        f"{len(selections)} distinct selections over 10 seeds",
    )


def test_degenerate_safety():
    """Token-empty sentences, single-sentence docs, and all-stopword docs
    score finitely and always select at least one sentence."""
    stoprules = SegmentationRules(stopwords=frozenset({"the", "a", "an"}))
    cases = [
        build_document("punct", "!!! a b. ..."),
        build_document("single", "x."),
        build_document("stopped", "the a an. a the.", rules=stoprules),
    ]
    for doc in cases:
        scores = score_document(doc)
        assert all(
            math.isfinite(s.cumulative)
            and math.isfinite(s.normalized)
            and math.isfinite(s.composite)
            for s in scores
        )
        for strategy in ALL_STRATEGIES:
            for mode, level in (("fixed", 1), ("percent", 25)):
                reduced = select(doc, scores, _config(strategy, mode, level, seed=3))
                assert len(reduced.selected_indices) >= 1
                assert reduced.reduced_text
    _verdict("degenerate safety (no division by zero, non-empty selections)", True)


def test_bench_monotonicity():
    """On 1,000 docs x 30 sentences, mean tokens_after strictly increases
    across percent in {25,50,75,100}; reduction finishes in < 60 s."""
    rng = random.Random(0xBE7C)
    vocab = [f"v{i:02d}" for i in range(40)]
    docs = []
    for d in range(1000):
        sentences = [
            " ".join(rng.choice(vocab) for _ in range(rng.randint(4, 12))) + "."
            for _ in range(30)
        ]
        docs.append(build_document(f"b{d}", " ".join(sentences)))
    configs = [_config("ranked", "percent", p) for p in (25, 50, 75, 100)]
    start = time.perf_counter()
    report = run_bench(docs, configs, repetitions=1, workers=1)
    elapsed = time.perf_counter() - start
    after = [row.mean_tokens_after for row in report.rows]
    strictly_increasing = all(a < b for a, b in zip(after, after[1:]))
    _verdict(
        "bench monotonicity (1000x30 corpus, <60s single-threaded)",
        strictly_increasing and elapsed < 60.0,
        f"tokens_after={['%.1f' % a for a in after]}, {elapsed:.1f}s",
    )


def test_keyword_recovery():
    """Planted-keyword corpus (500 docs, 10 sentences): ranked k=1 recovers
    the planted sentence >= 95% of the time; random k=1 lands in 10% +/- 5."""
    rows = planted_corpus(seed=0x5EED, n_docs=500, n_sentences=10)
    ranked_config = _config("ranked", "fixed", 1)
    random_config = _config("random", "fixed", 1, seed=42)
    hit_ranked = hit_random = 0
    for doc_id, label, text, planted in rows:
        doc = build_document(doc_id, text, label=label)
        if reduce_document(doc, ranked_config).selected_indices == (planted,):
            hit_ranked += 1
        if reduce_document(doc, random_config).selected_indices == (planted,):
            hit_random += 1
    ranked_rate = hit_ranked / len(rows)
    random_rate = hit_random / len(rows)
    _verdict(
        "keyword recovery (ranked k=1 >= 0.95; random k=1 in 0.10 +/- 0.05)",
        ranked_rate >= 0.95 and 0.05 <= random_rate <= 0.15,
        f"ranked={ranked_rate:.3f}, random={random_rate:.3f}",
    )
