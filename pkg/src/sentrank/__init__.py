"""sentrank: sentence-ranking context reduction for long documents.

Scores each sentence of a document with per-document TF-IDF (plain,
length-normalized, and lambda-weighted composite variants), selects a
subset by a fixed count or a percentage, and reassembles the survivors in
original order — so classifiers trained on short texts can run on long
documents at a fraction of the input size.
"""

from .errors import (
    DegenerateDocument,
    DuplicateId,
    MalformedLine,
    SentrankError,
    UnknownTerm,
    ZeroLengthSentence,
)
from .segmentation import (
    DEFAULT_RULES,
    DEFAULT_TERMINATORS,
    SENTENCE_JOINER,
    Document,
    SegmentationRules,
    Sentence,
    build_document,
    filter_stopwords,
    load_stopwords,
    segment,
    tokenize,
)
from .scoring import (
    DEFAULT_WEIGHTS,
    LambdaWeights,
    SentenceScore,
    TermIndex,
    build_term_index,
    composite_score,
    score_document,
    score_sentence,
    term_frequency,
)
from .selection import (
    MODES,
    SCORE_STRATEGIES,
    STRATEGIES,
    ReducedDocument,
    ReductionMetrics,
    SelectionConfig,
    rank_order,
    reduce_corpus,
    reduce_document,
    select,
    strategy_uses_scores,
    target_count,
)
from .corpus_io import (
    CorpusRecord,
    CorpusStats,
    ReductionRecord,
    corpus_stats,
    iter_corpus_records,
    read_corpus,
    read_reductions,
    write_corpus,
    write_reductions,
)
from .bench import BenchReport, BenchRow, emit_report, run_bench

__version__ = "0.1.0"
