import pytest
from hypothesis import given, strategies as st

from rindex.corpus import CorpusSpec, desk_texts, generate, letters, oracle_corpus
from rindex.index import RIndex


def test_single_copy_is_seed():
    spec = CorpusSpec("mutated-copies", 50, 1, 0.5, b"ACGT", 3)
    out = generate(spec)
    assert len(out) == 50
    assert generate(CorpusSpec("mutated-copies", 50, 7, 0.5, b"ACGT", 3))[:50] == out


def test_zero_mutation_repeats():
    out = generate(CorpusSpec("mutated-copies", 100, 10, 0.0, b"ACGT", 9))
    assert out == out[:100] * 10
    index = RIndex.build(out)
    assert index.r * 10 < index.n


def test_file_kind(tmp_path):
    src = tmp_path / "seed.txt"
    src.write_bytes(b"hello world")
    out = generate(CorpusSpec("file", 5, 3, 0.0, b"x", 0, str(src)))
    assert out == b"hello" * 3
    with pytest.raises(ValueError):
        generate(CorpusSpec("file", 5, 3, 0.0, b"x", 0))


def test_validation():
    for bad in (dict(kind="nope"), dict(mutation_rate=2.0), dict(copies=0), dict(alphabet=b"")):
        with pytest.raises(ValueError):
            CorpusSpec(**bad)


@given(st.integers(1, 60), st.integers(1, 5), st.floats(0, 1), st.integers(0, 2**31))
def test_mutations_stay_in_alphabet(seed_len, copies, rate, rng_seed):
    spec = CorpusSpec("mutated-copies", seed_len, copies, rate, b"TGCA", rng_seed)
    out = generate(spec)
    assert len(out) == seed_len * copies
    assert set(out) <= set(b"ACGT")
    assert generate(spec) == out
    if rate == 1.0:
        # every mutated character differs from the seed
        seed = out[:seed_len]
        assert all(a != b for k in range(1, copies)
                   for a, b in zip(seed, out[k * seed_len:(k + 1) * seed_len]))


def test_corpus_shapes():
    texts = oracle_corpus(count=40)
    assert len(texts) == 40 and all(len(t) < 2000 for t in texts)
    assert {len(set(t)) <= 26 for t in texts} == {True}
    assert all(len(t) <= 2000 for t in desk_texts())
    assert letters(4) == b"abcd"
