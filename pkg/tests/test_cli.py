"""End-to-end CLI behavior: flags, exit codes, stream discipline."""

import json
import math
import subprocess
import sys

import pytest

CORPUS_LINES = [
    {"id": "m1", "text": "मुंबई मोठे शहर आहे। पुणे सुंदर आहे। नागपूर मध्यवर्ती आहे। गाव शांत आहे।", "label": "city"},
    {"id": "e1", "text": "One two three four. Five six seven. Eight nine. Ten.", "label": "num"},
    {"id": "e2", "text": "Alpha beta. Gamma delta epsilon zeta."},
]


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "sentrank", *args],
        input=stdin,
        capture_output=True,
        timeout=120,
    )


@pytest.fixture
def corpus(tmp_path):
    path = tmp_path / "corpus.jsonl"
    path.write_text(
        "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in CORPUS_LINES),
        encoding="utf-8",
    )
    return path


def parse_output(path):
    header = None
    records = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.startswith("#"):
            header = json.loads(line[1:])
        elif line.strip():
            records.append(json.loads(line))
    return header, records


class TestReduce:
    def test_fixed_k_caps_sentence_count(self, corpus, tmp_path):
        out = tmp_path / "out.jsonl"
        result = run_cli(
            "reduce", "--input", str(corpus), "--output", str(out),
            "--strategy", "ranked", "--mode", "fixed", "--k", "2",
        )
        assert result.returncode == 0, result.stderr
        _, records = parse_output(out)
        assert len(records) == 3
        for record in records:
            assert record["metrics"]["sentences_after"] <= 2

    def test_percent_50_keeps_ceil_half(self, corpus, tmp_path):
        out = tmp_path / "out.jsonl"
        result = run_cli(
            "reduce", "--input", str(corpus), "--output", str(out),
            "--strategy", "ranked-normalized", "--mode", "percent", "--percent", "50",
        )
        assert result.returncode == 0, result.stderr
        _, records = parse_output(out)
        for record in records:
            n = record["metrics"]["sentences_before"]
            assert record["metrics"]["sentences_after"] == math.ceil(n / 2)

    def test_defaults_are_ranked_percent_50(self, corpus, tmp_path):
        out = tmp_path / "out.jsonl"
        result = run_cli("reduce", "--input", str(corpus), "--output", str(out))
        assert result.returncode == 0
        header, _ = parse_output(out)
        assert header["strategy"] == "ranked"
        assert header["mode"] == "percent"
        assert header["level"] == 50

    def test_percent_zero_is_usage_error(self, corpus):
        result = run_cli("reduce", "--input", str(corpus), "--percent", "0")
        assert result.returncode == 1
        assert b"percent" in result.stderr

    def test_random_without_seed_is_usage_error(self, corpus):
        result = run_cli("reduce", "--input", str(corpus), "--strategy", "random")
        assert result.returncode == 1
        assert b"seed" in result.stderr

    def test_bad_lambda_is_usage_error(self, corpus):
        result = run_cli("reduce", "--input", str(corpus), "--lambda1", "1.5")
        assert result.returncode == 1

    def test_missing_input_is_input_error(self, tmp_path):
        result = run_cli("reduce", "--input", str(tmp_path / "absent.jsonl"))
        assert result.returncode == 2

    def test_malformed_abort_vs_skip(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        path.write_text('{"id":"1","text":"a b."}\nBROKEN\n', encoding="utf-8")
        aborted = run_cli("reduce", "--input", str(path))
        assert aborted.returncode == 2
        assert b"line 2" in aborted.stderr
        out = tmp_path / "out.jsonl"
        skipped = run_cli(
            "reduce", "--input", str(path), "--output", str(out),
            "--on-malformed", "skip",
        )
        assert skipped.returncode == 0
        _, records = parse_output(out)
        assert len(records) == 1

    def test_duplicate_id_is_input_error(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        path.write_text(
            '{"id":"1","text":"a."}\n{"id":"1","text":"b."}\n', encoding="utf-8"
        )
        result = run_cli("reduce", "--input", str(path), "--on-malformed", "skip")
        assert result.returncode == 2
        assert b"duplicate" in result.stderr.lower()

    def test_byte_identical_modulo_timestamp(self, corpus, tmp_path):
        out = tmp_path / "out.jsonl"
        headers, bodies = [], []
        for _ in range(2):
            result = run_cli(
                "reduce", "--input", str(corpus), "--output", str(out),
                "--strategy", "random", "--seed", "99", "--percent", "75",
            )
            assert result.returncode == 0
            header, records = parse_output(out)
            body = [
                line for line in out.read_bytes().splitlines()
                if not line.startswith(b"#")
            ]
            header.pop("timestamp")
            headers.append(header)
            bodies.append(body)
        assert headers[0] == headers[1]
        assert bodies[0] == bodies[1]

    def test_stdin_stdout_roundtrip(self):
        stdin = b'{"id":"1","text":"a b. c d."}\n'
        result = run_cli("reduce", "--input", "-", "--percent", "50", stdin=stdin)
        assert result.returncode == 0
        lines = [l for l in result.stdout.splitlines() if l and not l.startswith(b"#")]
        assert len(lines) == 1
        assert json.loads(lines[0])["id"] == "1"

    def test_stopword_file_changes_terms_and_digest(self, corpus, tmp_path):
        stopfile = tmp_path / "stop.txt"
        stopfile.write_text("# marathi function words\nआहे\n", encoding="utf-8")
        out = tmp_path / "out.jsonl"
        result = run_cli(
            "reduce", "--input", str(corpus), "--output", str(out),
            "--stopwords", str(stopfile),
        )
        assert result.returncode == 0
        header, _ = parse_output(out)
        assert header["stopwords_digest"]
        plain = run_cli(
            "reduce", "--input", str(corpus), "--output",
            str(tmp_path / "plain.jsonl"), "--no-stopwords",
        )
        assert plain.returncode == 0
        plain_header, _ = parse_output(tmp_path / "plain.jsonl")
        assert plain_header["stopwords_digest"] is None

    def test_print_manifest_goes_to_stderr(self, corpus, tmp_path):
        out = tmp_path / "out.jsonl"
        result = run_cli(
            "reduce", "--input", str(corpus), "--output", str(out),
            "--print-manifest",
        )
        assert result.returncode == 0
        manifest_lines = [
            l for l in result.stderr.splitlines() if l.startswith(b"{")
        ]
        assert manifest_lines
        assert json.loads(manifest_lines[0])["command"] == "reduce"


class TestScore:
    def test_per_sentence_records_with_ranks(self, corpus, tmp_path):
        out = tmp_path / "scores.jsonl"
        result = run_cli("score", "--input", str(corpus), "--output", str(out))
        assert result.returncode == 0, result.stderr
        header, records = parse_output(out)
        assert header["lambda1"] == 0.5
        by_doc = {}
        for record in records:
            by_doc.setdefault(record["id"], []).append(record)
        assert set(by_doc) == {"m1", "e1", "e2"}
        for doc_records in by_doc.values():
            indices = [r["index"] for r in doc_records]
            assert indices == list(range(len(doc_records)))
            ranks = {r["ranks"]["ranked"] for r in doc_records}
            assert ranks == set(range(len(doc_records)))
            for r in doc_records:
                assert set(r["ranks"]) == {"composite", "ranked", "ranked-normalized"}


class TestStats:
    def test_json_format(self, corpus):
        result = run_cli("stats", "--input", str(corpus), "--format", "json")
        assert result.returncode == 0
        stats = json.loads(result.stdout)
        assert stats["doc_count"] == 3
        assert stats["sentences"]["max"] == 4

    def test_table_format(self, corpus):
        result = run_cli("stats", "--input", str(corpus))
        assert result.returncode == 0
        assert result.stdout.startswith(b"documents  3")


class TestBench:
    def test_csv_grid(self, corpus):
        result = run_cli(
            "bench", "--input", str(corpus), "--format", "csv",
            "--configs", "ranked,first:percent:50,100", "--repetitions", "1",
        )
        assert result.returncode == 0, result.stderr
        lines = result.stdout.decode("utf-8").splitlines()
        assert lines[0] == (
            "strategy,mode,level,docs_per_sec,total_seconds,"
            "mean_tokens_before,mean_tokens_after,reduction_ratio"
        )
        assert len(lines) == 5
        assert lines[1].startswith("ranked,percent,50")
        assert lines[4].startswith("first,percent,100")

    def test_bad_grid_is_usage_error(self, corpus):
        result = run_cli("bench", "--input", str(corpus), "--configs", "ranked-50")
        assert result.returncode == 1

    def test_random_grid_requires_seed(self, corpus):
        result = run_cli(
            "bench", "--input", str(corpus), "--configs", "random:percent:50",
        )
        assert result.returncode == 1
        with_seed = run_cli(
            "bench", "--input", str(corpus), "--configs", "random:percent:50",
            "--seed", "3", "--repetitions", "1",
        )
        assert with_seed.returncode == 0


class TestTopLevel:
    def test_no_command_is_usage_error(self):
        result = run_cli()
        assert result.returncode == 1

    def test_version_flag(self):
        result = run_cli("--version")
        assert result.returncode == 0
        assert result.stdout.startswith(b"sentrank")
