"""Locating occurrences with O(r) samples: toehold search and phi.

Text positions here are suffix start positions (values of SA). ``first``
marks ``SA[q]`` for every run-start row ``q``; ``samples[k]`` is ``SA`` at the
last row of run ``k``. Then for any ``i``::

    phi(i) = samples[first_to_run[rank1(first, i)] - 1] + (i - pred(first, i))

Position 1 is always marked (its row holds the unique terminator), so the
predecessor never fails. The optional window tables extend one known cell
``SA[p]`` to ``SA[p +- j]`` and ``LCP`` neighbours for ``j <= s``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import Reader, pack_ints, write_varint
from .errors import BadIndex, OutOfRange, WindowsNotBuilt
from .rlfm import RunLengthBWT
from .sparse_bits import SparseBits
from .text import PreparedText, SuffixStructures


@dataclass(frozen=True)
class Range:
    sp: int
    ep: int

    @property
    def occ(self) -> int:
        return self.ep - self.sp + 1


@dataclass(frozen=True)
class Toehold:
    range: Range
    row: int
    value: int


def encode_pattern(code_of: dict[int, int], pattern: bytes) -> list[int] | None:
    codes = []
    for b in pattern:
        c = code_of.get(b)
        if c is None:
            return None
        codes.append(c)
    return codes


class WindowTables:
    """Rows within distance ``s`` of a run border (array ends count as borders).

    ``w_sa``/``w_lcp`` hold SA and LCP at those rows in BWT order. ``p_plus``
    holds SA values of rows whose window ``[q..q+s]`` is not unary,
    ``p_minus`` those whose ``[q-s..q]`` is not unary; ``f_plus``/``f_minus``
    give each one's index into ``w_sa``.
    """

    def __init__(self, s, p_plus, p_minus, w_sa, w_lcp, f_plus, f_minus):
        self.s = s
        self.p_plus = p_plus
        self.p_minus = p_minus
        self.w_sa = w_sa
        self.w_lcp = w_lcp
        self.f_plus = f_plus
        self.f_minus = f_minus

    @classmethod
    def build(cls, structures: SuffixStructures, s: int) -> "WindowTables":
        if s < 1:
            raise ValueError("window width must be >= 1")
        bwt, sa, lcp = structures.bwt, structures.sa, structures.lcp
        n = len(bwt)
        # border[p] (0-based p in 1..n-1): rows p-1 and p differ
        borders = [0] * (n + 1)
        for p in range(1, n):
            borders[p] = borders[p - 1] + (bwt[p] != bwt[p - 1])
        borders[n] = borders[n - 1]

        def crossings(a: int, b: int) -> int:
            # number of borders between rows a..b (0-based, inclusive)
            return borders[b] - borders[a]

        plus_rows, minus_rows, w_rows = [], [], []
        for q in range(n):
            plus = q + s >= n or crossings(q, q + s) > 0
            minus = q - s < 0 or crossings(q - s, q) > 0
            if plus:
                plus_rows.append(q)
            if minus:
                minus_rows.append(q)
            if plus or minus:
                w_rows.append(q)
        index_of = {q: k for k, q in enumerate(w_rows)}
        plus_rows.sort(key=lambda q: sa[q])
        minus_rows.sort(key=lambda q: sa[q])
        return cls(
            s,
            SparseBits([sa[q] for q in plus_rows], n),
            SparseBits([sa[q] for q in minus_rows], n),
            [sa[q] for q in w_rows],
            [lcp[q] for q in w_rows],
            [index_of[q] for q in plus_rows],
            [index_of[q] for q in minus_rows],
        )

    def _anchor(self, value: int, direction: int) -> tuple[int, int]:
        bits, f = (self.p_plus, self.f_plus) if direction > 0 else (self.p_minus, self.f_minus)
        k = bits.rank1(value)
        return f[k - 1], value - bits.positions[k - 1]

    def sa_window(self, value: int, direction: int, count: int) -> list[int]:
        self._check(count)
        k, shift = self._anchor(value, direction)
        out = []
        for j in range(1, count + 1):
            idx = k + j * direction
            if not 0 <= idx < len(self.w_sa):
                break
            out.append(self.w_sa[idx] + shift)
        return out

    def plcp_window(self, value: int, direction: int, count: int) -> list[int]:
        self._check(count)
        k, delta = self._anchor(value, direction)
        out = []
        for j in range(1, count + 1):
            idx = k + j if direction > 0 else k - j + 1
            if not 0 <= idx < len(self.w_lcp):
                break
            out.append(self.w_lcp[idx] - delta)
        return out

    def _check(self, count: int) -> None:
        if not 0 <= count <= self.s:
            raise ValueError(f"window count {count} outside [0..{self.s}]")

    def __eq__(self, other) -> bool:
        return isinstance(other, WindowTables) and vars(self) == vars(other)

    def to_bytes(self, out: bytearray) -> None:
        write_varint(out, self.s)
        self.p_plus.to_bytes(out)
        self.p_minus.to_bytes(out)
        for arr in (self.w_sa, self.w_lcp, self.f_plus, self.f_minus):
            pack_ints(out, arr)

    @classmethod
    def read(cls, reader: Reader) -> "WindowTables":
        s = reader.varint()
        p_plus = SparseBits.read(reader)
        p_minus = SparseBits.read(reader)
        w_sa, w_lcp, f_plus, f_minus = (reader.packed() for _ in range(4))
        if len(f_plus) != len(p_plus) or len(f_minus) != len(p_minus) or len(w_sa) != len(w_lcp):
            raise BadIndex("inconsistent window tables")
        return cls(s, p_plus, p_minus, w_sa, w_lcp, f_plus, f_minus)


class LocateIndex:
    def __init__(self, rlbwt: RunLengthBWT, code_of: dict[int, int], first: SparseBits,
                 first_to_run: list[int], samples: list[int],
                 windows: WindowTables | None = None):
        self.rlbwt = rlbwt
        self.code_of = code_of
        self.first = first
        self.first_to_run = first_to_run
        self.samples = samples
        self.windows = windows
        self.n = rlbwt.n
        self.r = rlbwt.r
        # phi at the row-1 suffix wraps to SA[n]; kept apart from the formula
        self.wrap_value = samples[-1]

    @classmethod
    def build(cls, text: PreparedText, structures: SuffixStructures,
              s: int | None = None) -> "LocateIndex":
        rlbwt = RunLengthBWT.from_bwt(structures.bwt, text.sigma)
        sa = structures.sa
        starts = rlbwt.E.positions
        by_value = sorted(range(1, rlbwt.r + 1), key=lambda k: sa[starts[k - 1] - 1])
        first = SparseBits([sa[starts[k - 1] - 1] for k in by_value], rlbwt.n)
        samples = [sa[rlbwt.run_end(k) - 1] for k in range(1, rlbwt.r + 1)]
        windows = WindowTables.build(structures, s) if s else None
        return cls(rlbwt, dict(text.code_of), first, by_value, samples, windows)

    # -- counting -----------------------------------------------------------

    def count(self, pattern: bytes) -> Range | None:
        codes = encode_pattern(self.code_of, pattern)
        if codes is None:
            return None
        sp, ep = 1, self.n
        for c in reversed(codes):
            step = self.rlbwt.backward_step(c, sp, ep)
            if step is None:
                return None
            sp, ep = step
        return Range(sp, ep)

    def count_with_toehold(self, pattern: bytes, trace: list | None = None) -> Toehold | None:
        """Backward search that also tracks ``SA[ep]`` of the current range.

        When ``trace`` is a list, ``(sp, ep, row, value)`` is appended after
        every step (the initial full range included).
        """
        codes = encode_pattern(self.code_of, pattern)
        if codes is None:
            return None
        rl = self.rlbwt
        sp, ep = 1, self.n
        value = self.samples[-1]
        if trace is not None:
            trace.append((sp, ep, ep, value))
        for c in reversed(codes):
            step = rl.backward_step(c, sp, ep)
            if step is None:
                return None
            k = rl.run_of(ep)
            if rl.Lp[k] == c:
                value -= 1
            else:
                # last row of the last c-run inside [sp..ep] is a sampled run end
                value = self.samples[rl.last_run_at_or_before(c, k) - 1] - 1
            sp, ep = step
            if trace is not None:
                trace.append((sp, ep, ep, value))
        return Toehold(Range(sp, ep), ep, value)

    # -- locating -----------------------------------------------------------

    def phi(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise OutOfRange(f"text position {i} outside [1..{self.n}]")
        k = self.first.rank1(i)
        run = self.first_to_run[k - 1]
        delta = i - self.first.positions[k - 1]
        if run == 1:
            return self.wrap_value + delta
        return self.samples[run - 2] + delta

    def locate(self, pattern: bytes) -> list[int]:
        """Occurrences in descending SA-row order: SA[ep], SA[ep-1], ..., SA[sp]."""
        hold = self.count_with_toehold(pattern)
        if hold is None:
            return []
        out = [hold.value]
        i = hold.value
        phi = self.phi
        for _ in range(hold.range.occ - 1):
            i = phi(i)
            out.append(i)
        return out

    # -- windows ------------------------------------------------------------

    def _windows(self) -> WindowTables:
        if self.windows is None:
            raise WindowsNotBuilt("index built without window tables")
        return self.windows

    def sa_window(self, value: int, direction: int, count: int) -> list[int]:
        """``[SA[p+d], SA[p+2d], ...]`` for ``d = direction``, given ``value = SA[p]``."""
        if not 1 <= value <= self.n:
            raise OutOfRange(f"SA value {value} outside [1..{self.n}]")
        return self._windows().sa_window(value, direction, count)

    def plcp_window(self, value: int, direction: int, count: int) -> list[int]:
        """Forward: ``[LCP[p+1], ..., LCP[p+count]]``; backward: ``[LCP[p], LCP[p-1], ...]``."""
        if not 1 <= value <= self.n:
            raise OutOfRange(f"SA value {value} outside [1..{self.n}]")
        return self._windows().plcp_window(value, direction, count)

    # -- serialization ------------------------------------------------------

    def to_bytes(self, out: bytearray) -> None:
        self.first.to_bytes(out)
        pack_ints(out, self.first_to_run)
        pack_ints(out, self.samples)

    @classmethod
    def read(cls, reader: Reader, rlbwt: RunLengthBWT, code_of) -> "LocateIndex":
        first = SparseBits.read(reader)
        first_to_run = reader.packed()
        samples = reader.packed()
        if len(first) != rlbwt.r or len(first_to_run) != rlbwt.r or len(samples) != rlbwt.r:
            raise BadIndex("inconsistent locate tables")
        return cls(rlbwt, code_of, first, first_to_run, samples)
