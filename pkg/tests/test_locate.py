import random

import pytest
from hypothesis import given, strategies as st

from rindex.errors import OutOfRange, WindowsNotBuilt
from rindex.locate import LocateIndex, Range
from rindex.selftest import (absent_patterns, check_count_locate, check_primary_occurrences,
                             check_anchored_copies, check_toehold, check_windows,
                             distinct_substrings)
from rindex.text import build_structures, naive_locate, prepare_text

from conftest import oracle_of, structures_of


def locator(raw, s=None):
    text, st_ = structures_of(raw)
    return LocateIndex.build(text, st_, s)


@pytest.fixture
def miss_loc():
    return locator(b"mississippi", 2)


def test_build_shape(miss_loc):
    assert miss_loc.r == 9
    assert len(miss_loc.samples) == 9 and len(miss_loc.first) == 9
    one = locator(b"")
    assert (one.r, one.samples) == (1, [1])
    assert locator(b"aaaa").r == len(oracle_of(b"aaaa").run_starts())


def test_count_examples(miss_loc):
    assert miss_loc.count(b"ssi") == Range(11, 12)
    assert miss_loc.count(b"ssi").occ == 2
    assert miss_loc.count(b"") == Range(1, 12)
    assert miss_loc.count(b"ssip").occ == 1
    assert miss_loc.count(b"xyz") is None
    assert miss_loc.count(b"ssss") is None


def test_toehold_examples(miss_loc):
    hold = miss_loc.count_with_toehold(b"ssi")
    assert (hold.row, hold.value) == (12, 3)
    hold = miss_loc.count_with_toehold(b"mississippi")
    assert (hold.row, hold.value) == (6, 1)
    assert miss_loc.count_with_toehold(b"spa") is None


def test_phi_examples(miss_loc):
    n = 12
    assert miss_loc.phi(3) == 6
    sa = structures_of(b"mississippi")[1].sa
    assert miss_loc.phi(sa[1]) == n
    seen, i = [], sa[-1]
    for _ in range(n - 1):
        seen.append(i)
        i = miss_loc.phi(i)
    seen.append(i)
    assert sorted(seen) == list(range(1, n + 1))
    with pytest.raises(OutOfRange):
        miss_loc.phi(0)


def test_locate_examples(miss_loc):
    assert sorted(miss_loc.locate(b"ssi")) == [3, 6]
    assert sorted(miss_loc.locate(b"i")) == [2, 5, 8, 11]
    assert sorted(miss_loc.locate(b"")) == list(range(1, 13))
    assert miss_loc.locate(b"zz") == []


def test_window_examples(miss_loc):
    assert miss_loc.sa_window(2, 1, 2) == [1, 10]
    assert miss_loc.sa_window(2, 1, 0) == []
    assert miss_loc.sa_window(12, -1, 2) == []
    assert miss_loc.plcp_window(5, 1, 2) == [4, 0]
    assert miss_loc.plcp_window(12, -1, 1) == [0]
    with pytest.raises(WindowsNotBuilt):
        locator(b"mississippi").sa_window(2, 1, 1)


@pytest.mark.parametrize("s", [1, 2, 4, 8])
def test_desk_windows(desk, s):
    assert check_windows(locator(desk, s), oracle_of(desk)) == []


def test_desk_locate_and_toehold(desk):
    loc = locator(desk)
    o = oracle_of(desk)
    pats = [b""] + distinct_substrings(desk, 5) + absent_patterns(desk, 20, random.Random(1))
    assert check_count_locate(loc, o, pats) == []
    assert check_toehold(loc, o, pats) == []


def test_desk_phi_and_disa(desk):
    loc = locator(desk)
    o = oracle_of(desk)
    n = o.n
    for p in range(2, n + 1):
        assert loc.phi(o.sa[p - 1]) == o.sa[p - 2]
    phrase = {o.sa[q - 1] for q in o.run_starts()}
    for i in range(2, n + 1):
        if i not in phrase:  # i-1 and i lie inside one phrase
            assert loc.phi(i - 1) == loc.phi(i) - 1
            f = loc.phi(i)
            assert o.isa[i - 1] - o.isa[i - 2] == o.isa[f - 1] - o.isa[f - 2]


def test_desk_repetition_properties(desk):
    o = oracle_of(desk)
    assert check_primary_occurrences(o) == []
    assert check_anchored_copies(o) == []


@given(st.text(alphabet="abc", max_size=150).map(str.encode), st.binary(max_size=4))
def test_locate_property(raw, probe):
    loc = LocateIndex.build(prepare_text(raw), build_structures(prepare_text(raw)), 3)
    text = prepare_text(raw)
    pats = [probe.replace(b"\x00", b"a"), raw[: len(probe)], raw[len(raw) // 2 :][:3]]
    for pat in pats:
        assert sorted(loc.locate(pat)) == naive_locate(text, pat)
