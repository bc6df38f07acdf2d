from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oneplanar.drawing import recover_original  # noqa: E402
from oneplanar.gen import corpus  # noqa: E402

CORPUS_SIZE = 200
CORPUS_SEED = 1

_corpus_cache: dict = {}


def shared_corpus():
    if "items" not in _corpus_cache:
        items = corpus(CORPUS_SIZE, CORPUS_SEED)
        _corpus_cache["items"] = items
        _corpus_cache["graphs"] = [recover_original(it.drawing) for it in items]
    return _corpus_cache["items"], _corpus_cache["graphs"]


@pytest.fixture(scope="session")
def corpus_items():
    return shared_corpus()[0]


@pytest.fixture(scope="session")
def corpus_graphs():
    return shared_corpus()[1]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
