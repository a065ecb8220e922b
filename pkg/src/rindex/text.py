"""Text preparation and reference suffix structures.

All positions are 1-based. The structures built here are the O(n)-space
construction path for the index and double as the test oracle, so the
quadratic ``naive_*`` helpers are kept deliberately simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import TerminatorInInput

TERMINATOR = 1


@dataclass(frozen=True)
class PreparedText:
    """Terminated text remapped to the effective alphabet ``[1..sigma]``."""

    symbols: tuple[int, ...]
    sigma: int
    byte_of: dict[int, int]
    code_of: dict[int, int]

    @property
    def n(self) -> int:
        return len(self.symbols)

    def restore(self) -> bytes:
        """Raw bytes without the terminator."""
        return bytes(self.byte_of[c] for c in self.symbols[:-1])

    @cached_property
    def raw(self) -> bytes:
        return self.restore()


@dataclass(frozen=True)
class SuffixStructures:
    sa: list[int]
    isa: list[int]
    lcp: list[int]
    bwt: list[int]


def prepare_text(raw: bytes) -> PreparedText:
    raw = bytes(raw)
    if 0 in raw:
        raise TerminatorInInput(f"byte 0 at offset {raw.index(0)} is reserved")
    distinct = sorted(set(raw))
    code_of = {b: k + 2 for k, b in enumerate(distinct)}
    byte_of = {c: b for b, c in code_of.items()}
    symbols = tuple(code_of[b] for b in raw) + (TERMINATOR,)
    return PreparedText(symbols, len(distinct) + 1, byte_of, code_of)


def build_sa(text: PreparedText) -> list[int]:
    """Suffix array by prefix doubling (O(n log^2 n) with numpy sorts)."""
    s = np.asarray(text.symbols, dtype=np.int64)
    n = len(s)
    rank = s.copy()
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:]
        order = np.lexsort((second, rank))
        first_sorted = rank[order]
        second_sorted = second[order]
        new_group = np.empty(n, dtype=bool)
        new_group[0] = True
        new_group[1:] = (first_sorted[1:] != first_sorted[:-1]) | (
            second_sorted[1:] != second_sorted[:-1]
        )
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order] = np.cumsum(new_group)
        rank = new_rank
        if new_group.all():
            break
        k *= 2
    return (order + 1).tolist()


def build_isa(sa: list[int]) -> list[int]:
    isa = [0] * len(sa)
    for p, i in enumerate(sa, start=1):
        isa[i - 1] = p
    return isa


def build_lcp(text: PreparedText, sa: list[int], isa: list[int]) -> list[int]:
    """Kasai et al.: follow Psi(p) = ISA[(SA[p] mod n) + 1], reusing l - 1."""
    t = text.symbols
    n = len(t)
    lcp = [0] * n
    if n == 1:
        return lcp
    p = isa[0]  # start at the suffix T[1..], then walk Psi = text order
    ell = 0
    for _ in range(n):
        if p > 1:
            i = sa[p - 1] - 1
            j = sa[p - 2] - 1
            while i + ell < n and j + ell < n and t[i + ell] == t[j + ell]:
                ell += 1
            lcp[p - 1] = ell
            if ell:
                ell -= 1
        else:
            ell = 0
        p = isa[sa[p - 1] % n]
    return lcp


def build_bwt(text: PreparedText, sa: list[int]) -> list[int]:
    t = text.symbols
    return [t[i - 2] if i > 1 else t[-1] for i in sa]


def build_structures(text: PreparedText) -> SuffixStructures:
    sa = build_sa(text)
    isa = build_isa(sa)
    return SuffixStructures(sa, isa, build_lcp(text, sa, isa), build_bwt(text, sa))


def naive_locate(text: PreparedText, pattern: bytes) -> list[int]:
    """All 1-based starts of ``pattern`` in the raw text, by direct scanning."""
    if not pattern:
        return list(range(1, text.n + 1))
    raw = text.raw
    out = []
    i = raw.find(pattern)
    while i >= 0:
        out.append(i + 1)
        i = raw.find(pattern, i + 1)
    return out


def naive_sa(symbols) -> list[int]:
    """Exhaustive suffix sort; quadratic, oracle use only."""
    s = list(symbols)
    return [i + 1 for i in sorted(range(len(s)), key=lambda i: s[i:])]


def naive_lcp(symbols, sa: list[int]) -> list[int]:
    s = list(symbols)
    out = [0]
    for p in range(1, len(sa)):
        a, b = sa[p - 1] - 1, sa[p] - 1
        ell = 0
        while a + ell < len(s) and b + ell < len(s) and s[a + ell] == s[b + ell]:
            ell += 1
        out.append(ell)
    return out
