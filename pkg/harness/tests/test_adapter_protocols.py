"""Subprocess and HTTP adapter protocol behavior, including failure modes."""

import http.server
import sys
import threading

import pytest

from rankeval import AdapterFailure, HTTPAdapter, SubprocessAdapter

FIRST_WORD_CLASSIFIER = [
    sys.executable,
    "-c",
    "import sys\n"
    "for line in sys.stdin:\n"
    "    words = line.split()\n"
    "    print(words[0] if words else 'empty')\n",
]


class TestSubprocessAdapter:
    def test_one_label_per_line_in_order(self):
        adapter = SubprocessAdapter(FIRST_WORD_CLASSIFIER)
        labels = adapter.classify(["alpha beta", "gamma delta", "epsilon"])
        assert labels == ["alpha", "gamma", "epsilon"]

    def test_newlines_in_text_are_flattened(self):
        adapter = SubprocessAdapter(FIRST_WORD_CLASSIFIER)
        labels = adapter.classify(["first\nsecond", "third"])
        assert labels == ["first", "third"]

    def test_utf8_round_trip(self):
        adapter = SubprocessAdapter(FIRST_WORD_CLASSIFIER)
        assert adapter.classify(["मराठी मजकूर"]) == ["मराठी"]

    def test_nonzero_exit_is_failure(self):
        adapter = SubprocessAdapter([sys.executable, "-c", "raise SystemExit(3)"])
        with pytest.raises(AdapterFailure):
            adapter.classify(["x"])

    def test_wrong_label_count_is_failure(self):
        adapter = SubprocessAdapter([sys.executable, "-c", "print('only-one')"])
        with pytest.raises(AdapterFailure):
            adapter.classify(["a", "b"])

    def test_timeout_is_failure(self):
        adapter = SubprocessAdapter(
            [sys.executable, "-c", "import time; time.sleep(30)"], timeout=0.5
        )
        with pytest.raises(AdapterFailure):
            adapter.classify(["x"])

    def test_unspawnable_command_is_failure(self):
        adapter = SubprocessAdapter(["/nonexistent/classifier"])
        with pytest.raises(AdapterFailure):
            adapter.classify(["x"])

    def test_empty_command_rejected(self):
        with pytest.raises(ValueError):
            SubprocessAdapter([])


class _LabelHandler(http.server.BaseHTTPRequestHandler):
    def do_POST(self):
        length = int(self.headers.get("Content-Length", 0))
        text = self.rfile.read(length).decode("utf-8")
        label = (text.split() or ["empty"])[0].upper()
        body = label.encode("utf-8")
        self.send_response(200)
        self.send_header("Content-Type", "text/plain; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


@pytest.fixture
def label_server():
    server = http.server.ThreadingHTTPServer(("127.0.0.1", 0), _LabelHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}/classify"
    server.shutdown()


class TestHTTPAdapter:
    def test_post_and_read_label(self, label_server):
        adapter = HTTPAdapter(label_server)
        assert adapter.classify(["alpha beta", "gamma"]) == ["ALPHA", "GAMMA"]

    def test_parallel_requests_preserve_order(self, label_server):
        adapter = HTTPAdapter(label_server, max_workers=4)
        texts = [f"word{i} tail" for i in range(20)]
        assert adapter.classify(texts) == [f"WORD{i}" for i in range(20)]

    def test_unreachable_endpoint_is_failure(self):
        adapter = HTTPAdapter("http://127.0.0.1:9/classify", timeout=0.5)
        with pytest.raises(AdapterFailure):
            adapter.classify(["x"])
