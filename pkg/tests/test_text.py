import pytest
from hypothesis import given, strategies as st

from rindex.errors import TerminatorInInput
from rindex.text import (build_bwt, build_isa, build_lcp, build_sa, build_structures,
                         naive_lcp, naive_locate, naive_sa, prepare_text)

from conftest import oracle_of, structures_of

texts = st.binary(min_size=0, max_size=120).map(lambda b: bytes(x % 26 + 97 for x in b))
small_alpha = st.text(alphabet="ab", max_size=80).map(str.encode)


def test_prepare_examples():
    t = prepare_text(b"mississippi")
    assert (t.n, t.sigma) == (12, 5)
    assert t.code_of == {ord("i"): 2, ord("m"): 3, ord("p"): 4, ord("s"): 5}
    assert t.symbols[-1] == 1
    empty = prepare_text(b"")
    assert (empty.n, empty.sigma, empty.symbols) == (1, 1, (1,))
    assert prepare_text(b"aaaa").symbols == (2, 2, 2, 2, 1)


def test_terminator_rejected():
    with pytest.raises(TerminatorInInput):
        prepare_text(b"ab\x00c")


def test_mississippi_arrays(miss):
    _, s = miss
    assert s.sa == [12, 11, 8, 5, 2, 1, 10, 9, 7, 4, 6, 3]
    assert s.isa == [6, 5, 12, 10, 4, 11, 9, 3, 8, 7, 2, 1]
    assert s.lcp == [0, 0, 1, 1, 4, 0, 0, 1, 0, 2, 1, 3]
    assert s.bwt == [2, 4, 5, 5, 3, 1, 4, 2, 5, 5, 2, 2]


def test_small_examples():
    aba = prepare_text(b"aba")
    sa = build_sa(aba)
    assert sa == [4, 3, 1, 2]
    assert build_isa(sa) == [3, 4, 2, 1]
    _, s = structures_of(b"aaaa")
    assert s.lcp == [0, 0, 1, 2, 3]
    # SA = [5,4,3,2,1], so BWT[p] = T[SA[p]-1] gives a,a,a,a then the wrapped terminator
    assert s.bwt == [2, 2, 2, 2, 1]
    _, one = structures_of(b"")
    assert (one.sa, one.isa, one.lcp, one.bwt) == ([1], [1], [0], [1])


def test_naive_locate():
    t = prepare_text(b"mississippi")
    assert naive_locate(t, b"ssi") == [3, 6]
    assert naive_locate(t, b"xyz") == []
    assert naive_locate(t, b"") == list(range(1, 13))


def test_desk_structures_match_brute_force(desk):
    text, s = structures_of(desk)
    o = oracle_of(desk)
    assert s.sa == o.sa
    assert s.lcp == o.lcp
    assert s.bwt == o.bwt
    assert [s.sa[p - 1] for p in s.isa] == list(range(1, text.n + 1))


@given(texts)
def test_structures_property(raw):
    text = prepare_text(raw)
    s = build_structures(text)
    assert s.sa == naive_sa(text.symbols)
    assert all(s.sa[s.isa[i] - 1] == i + 1 for i in range(text.n))
    assert s.lcp == naive_lcp(text.symbols, s.sa)
    assert s.bwt == build_bwt(text, s.sa)
    assert all(s.bwt[p] == text.symbols[(s.sa[p] - 2) % text.n] for p in range(text.n))


@given(small_alpha)
def test_restore_roundtrip(raw):
    t = prepare_text(raw)
    assert t.restore() == raw
    assert build_lcp(t, build_sa(t), build_isa(build_sa(t))) == naive_lcp(t.symbols, naive_sa(t.symbols))
