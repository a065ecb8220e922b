"""Acceptance criteria 1-9 at full scale, one test (and one printed line) each.

Run directly with ``python tests/test_acceptance.py`` for just the summary.
"""

import pytest

from rindex import selftest
from rindex.corpus import desk_texts, oracle_corpus


@pytest.fixture(scope="module")
def corpus_results():
    texts = oracle_corpus()
    assert len(texts) >= 200 and all(len(t) + 1 <= 2000 for t in texts)
    return {res.number: res for res in selftest.corpus_criteria(texts)}


def report(res, capsys):
    with capsys.disabled():
        print("\n" + res.line())
    assert res.passed, res.detail


@pytest.mark.parametrize("number", [1, 2, 3])
def test_corpus_criteria(number, corpus_results, capsys):
    report(corpus_results[number], capsys)
    assert corpus_results[number].seconds < 120


def test_criterion_4_windows(capsys):
    report(selftest.criterion_4(desk_texts()), capsys)


def test_criterion_5_relative_access(capsys):
    res = selftest.criterion_5(desk_texts())
    report(res, capsys)
    assert res.seconds < 120


def test_criterion_6_anchored_copies(capsys):
    report(selftest.criterion_6(desk_texts()), capsys)


def test_criterion_7_compression_trend(capsys):
    res = selftest.criterion_7()
    report(res, capsys)
    assert res.seconds < 30


def test_criterion_8_size_budget(capsys):
    res = selftest.criterion_8()
    report(res, capsys)
    assert res.seconds < 10


def test_criterion_9_round_trip(capsys):
    report(selftest.criterion_9(selftest.fixture_texts()), capsys)


if __name__ == "__main__":
    import sys

    results = selftest.run_all(progress=lambda res: print(res.line(), flush=True))
    sys.exit(0 if all(res.passed for res in results) else 1)
