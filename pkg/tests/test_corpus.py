from __future__ import annotations

import json

import pytest

from webfloer import corpus
from webfloer.cli import canonical_json


@pytest.fixture(scope="module")
def result():
    return corpus.run_corpus()


def test_all_entries_pass(result):
    assert result["failed"] == []
    assert result["passed"] == result["total"] == len(corpus.load_golden())


def test_golden_and_table_agree():
    assert set(corpus.entries()) == set(corpus.load_golden())


def test_mutation_is_caught():
    golden = corpus.load_golden()
    golden["theta/hat"] = dict(golden["theta/hat"], classes=golden["theta/hat"]["classes"] + 1)
    out = corpus.run_corpus(golden)
    assert out["failed"] == ["theta/hat"]


def test_missing_golden_fails():
    golden = corpus.load_golden()
    del golden["tait/theta"]
    assert corpus.run_corpus(golden)["failed"] == ["tait/theta"]


def test_unknown_golden_key_fails():
    golden = dict(corpus.load_golden(), **{"tait/nothing": 1})
    assert corpus.run_corpus(golden)["failed"] == ["tait/nothing"]


def test_threads_byte_identical(result):
    one = canonical_json(result)
    assert canonical_json(corpus.run_corpus(threads=4)) == one
    assert json.loads(one)["total"] == result["total"]
