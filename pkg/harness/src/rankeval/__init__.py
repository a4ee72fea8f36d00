"""rankeval: accuracy/latency evaluation for sentence-reduced corpora.

Drives an external short-text classifier (subprocess line protocol or
HTTP) over reduction files produced by the ``sentrank`` CLI and tabulates
exact-match accuracy and wall-clock time per (strategy, level).
"""

from .adapters import ClassifierAdapter, HTTPAdapter, SubprocessAdapter
from .bow import BagOfWordsClassifier
from .errors import AdapterFailure, MissingLabel, RankevalError
from .evaluate import (
    EvalConfig,
    EvalReport,
    EvalRow,
    ReductionFile,
    load_reduction,
    run_eval,
)
from .report import CSV_COLUMNS, render_report
from .synth import (
    DEFAULT_CLASS_KEYWORDS,
    DEFAULT_NOISE_VOCAB,
    PlantedDoc,
    make_synthetic_corpus,
    write_truth,
)

__version__ = "0.1.0"
