"""Block-structured random access to T, SA, ISA and LCP in O(r log(n/r)) space.

One generic structure serves three arrays: the text itself, the
differential suffix array ``DSA[p] = SA[p] - SA[p-1]`` and the differential
inverse suffix array ``DISA[i] = ISA[i] - ISA[i-1]`` (with ``SA[0] = ISA[0] =
0``). Each array repeats around ``r`` anchors: any segment has a copy that
touches the *core* ``{a + d - 1, a + d}`` of some anchor ``a``, where

* TEXT: anchors are phrase starts ``SA[q]`` of run-start rows ``q``, ``d = 0``;
* DSA: anchors are run-start rows, ``d = 1``;
* DISA: anchors are phrase starts, ``d = 1``.

Level 0 cuts the array into top blocks of width ``B`` (a power of two
``>= n/r``). Level ``l >= 1`` has, per anchor, an area of width ``2 s_l``
with ``s_l = B / 2**(l-1)`` around the core, split into 7 half-blocks of
width ``s_l / 2`` starting every ``s_l / 4``. Every top block and every
half-block points to a copy inside an area one level down; the last level
stores its areas explicitly. Differential arrays additionally carry the
offset sums needed to turn differences back into absolute values.
"""

from __future__ import annotations

import math
from bisect import bisect_left

import numpy as np

from .codec import Reader, write_varint, zigzag
from .errors import BadIndex, OutOfRange, SectionMissing, WindowsNotBuilt
from .locate import LocateIndex
from .text import PreparedText, SuffixStructures

TEXT, DSA, DISA = "text", "sa", "isa"
DOMAINS = (TEXT, DSA, DISA)
_CORE_SHIFT = {TEXT: 0, DSA: 1, DISA: 1}


def default_alpha(n: int, r: int) -> int:
    return max(4, math.ceil(math.log2(max(n / r, 1))))


class RelativeBlocks:
    def __init__(self, domain: str, n: int, anchors: list[int], alpha: int, *,
                 explicit: list[int] | None = None, width: int = 0, depth: int = 0,
                 top: list | None = None, top_base: list[int] | None = None,
                 levels: list | None = None, leaves: list | None = None):
        self.domain = domain
        self.n = n
        self.anchors = anchors
        self.alpha = alpha
        self.shift = _CORE_SHIFT[domain]
        self.summed = domain != TEXT
        self.explicit = explicit
        self.width = width  # top block width B
        self.depth = depth  # last level l*
        self.top = top or []
        self.top_base = top_base or []
        self.levels = levels or []  # levels[l - 1][j][k] = (anchor, off, delta, Delta) or None
        self.leaves = leaves or []

    # -- geometry -------------------------------------------------------------

    def block_width(self, level: int) -> int:
        return self.width >> (level - 1)

    def area(self, j: int, level: int) -> tuple[int, int, int]:
        """Nominal start, clamped start and clamped end of anchor ``j``'s area."""
        s = self.block_width(level)
        g = self.anchors[j] + self.shift - s
        return g, max(1, g), min(self.n, g + 2 * s - 1)

    def half_blocks(self, j: int, level: int):
        """``(k, start, end)`` of the non-empty clamped half-blocks of an area."""
        s = self.block_width(level)
        g = self.anchors[j] + self.shift - s
        q = s // 4
        for k in range(7):
            a, b = max(1, g + k * q), min(self.n, g + k * q + s // 2 - 1)
            if a <= b:
                yield k, a, b

    @property
    def level_count(self) -> int:
        return 0 if self.explicit is not None else self.depth + 1

    @property
    def leaf_cells(self) -> int:
        if self.explicit is not None:
            return len(self.explicit)
        return sum(len(cells) for cells in self.leaves)

    # -- construction ---------------------------------------------------------

    @classmethod
    def build(cls, domain: str, values, prefix, anchors: list[int],
              alpha: int | None = None) -> "RelativeBlocks":
        """``values`` is the array (0-based list of length n), ``prefix[p]`` its
        absolute reading at ``p`` (``prefix[0] = 0``; ignored for TEXT)."""
        n = len(values)
        r = len(anchors)
        alpha = alpha or default_alpha(n, r)
        if 4 * r >= n:
            return cls(domain, n, anchors, alpha, explicit=list(values))
        width = 1 << max(0, math.ceil(math.log2(-(-n // r))))
        depth = 1
        while (width >> (depth - 1)) >= 4 * alpha:
            depth += 1
        self = cls(domain, n, anchors, alpha, width=width, depth=depth)
        arr = np.asarray(values, dtype=np.int64)
        P = prefix if self.summed else None
        finder = _CopyFinder(arr, anchors, self.shift)

        def pointer(start: int, end: int, level: int) -> tuple[int, int, int]:
            x = finder.copy_of(start, end)
            j = bisect_left(anchors, x - self.shift)
            g, gc, _ = self.area(j, level)
            delta = P[gc - 1] - P[x - 1] if P is not None else 0
            return j, x - g, delta

        for u in range(1, n + 1, width):
            self.top.append(pointer(u, min(n, u + width - 1), 1))
            self.top_base.append(P[u - 1] if P is not None else 0)
        for level in range(1, depth):
            rows = []
            for j in range(r):
                entries = [None] * 7
                _, gc, _ = self.area(j, level)
                for k, a, b in self.half_blocks(j, level):
                    aj, off, delta = pointer(a, b, level + 1)
                    Delta = P[a - 1] - P[gc - 1] if P is not None else 0
                    entries[k] = (aj, off, delta, Delta)
                rows.append(entries)
            self.levels.append(rows)
        for j in range(r):
            _, gc, ge = self.area(j, depth)
            self.leaves.append(list(values[gc - 1 : ge]))
        return self

    # -- queries --------------------------------------------------------------

    def _fetch(self, pos: int, length: int) -> list[int]:
        """Cells (or absolute values) at ``pos .. pos+length-1`` inside one top block."""
        t = (pos - 1) // self.width
        u = t * self.width + 1
        j, off, delta = self.top[t]
        f = self.top_base[t]
        level = 1
        while True:
            g, gc, _ = self.area(j, level)
            cur = pos - u + g + off
            f += delta
            if level == self.depth:
                cells = self.leaves[j]
                o = cur - gc
                if not self.summed:
                    return cells[o : o + length]
                f += sum(cells[:o])
                out = []
                for c in cells[o : o + length]:
                    f += c
                    out.append(f)
                return out
            q = self.block_width(level) // 4
            k = min(6, (cur - g) // q)
            j, off, delta, Delta = self.levels[level - 1][j][k]
            f += Delta
            pos, u = cur, max(1, g + k * q)
            level += 1

    def cells(self, pos: int, length: int) -> list[int]:
        """Positions ``pos..pos+length-1``: text codes, or absolute SA/ISA values."""
        if length < 0 or pos < 1 or pos + length - 1 > self.n:
            raise OutOfRange(f"range [{pos}, {pos + length - 1}] outside [1..{self.n}]")
        if self.explicit is not None:
            seg = self.explicit[pos - 1 : pos - 1 + length]
            if not self.summed:
                return seg
            base = sum(self.explicit[: pos - 1])
            out = []
            for c in seg:
                base += c
                out.append(base)
            return out
        out = []
        end = pos + length
        while pos < end:
            top_end = ((pos - 1) // self.width + 1) * self.width + 1
            chunk = min(self.alpha, end - pos, top_end - pos)
            out.extend(self._fetch(pos, chunk))
            pos += chunk
        return out

    def iter_pointers(self):
        """``(level, start, end, target_start)`` for every stored pointer."""
        if self.explicit is not None:
            return
        for t, (j, off, _) in enumerate(self.top):
            u = t * self.width + 1
            g, _, _ = self.area(j, 1)
            yield 0, u, min(self.n, u + self.width - 1), g + off
        for level, rows in enumerate(self.levels, start=1):
            for j, entries in enumerate(rows):
                for k, a, b in self.half_blocks(j, level):
                    aj, off, _, _ = entries[k]
                    g, _, _ = self.area(aj, level + 1)
                    yield level, a, b, g + off

    # -- serialization --------------------------------------------------------

    def to_bytes(self, out: bytearray) -> None:
        out += DOMAINS.index(self.domain).to_bytes(1, "little")
        for v in (self.n, len(self.anchors), self.alpha):
            write_varint(out, v)
        prev = 0
        for a in self.anchors:
            write_varint(out, a - prev)
            prev = a
        if self.explicit is not None:
            out.append(1)
            for c in self.explicit:
                write_varint(out, zigzag(c))
            return
        out.append(0)
        write_varint(out, self.width)
        write_varint(out, self.depth)
        for (j, off, delta), base in zip(self.top, self.top_base):
            for v in (j, off, zigzag(delta), zigzag(base)):
                write_varint(out, v)
        for rows in self.levels:
            for entries in rows:
                mask = sum(1 << k for k, e in enumerate(entries) if e is not None)
                out.append(mask)
                for e in entries:
                    if e is not None:
                        for v in (e[0], e[1], zigzag(e[2]), zigzag(e[3])):
                            write_varint(out, v)
        for cells in self.leaves:
            write_varint(out, len(cells))
            for c in cells:
                write_varint(out, zigzag(c))

    @classmethod
    def read(cls, reader: Reader) -> "RelativeBlocks":
        code = reader.take(1)[0]
        if code >= len(DOMAINS):
            raise BadIndex(f"unknown block domain {code}")
        domain = DOMAINS[code]
        n, r, alpha = reader.varint(), reader.varint(), reader.varint()
        anchors = []
        prev = 0
        for _ in range(r):
            prev += reader.varint()
            anchors.append(prev)
        if reader.take(1)[0]:
            return cls(domain, n, anchors, alpha, explicit=[reader.svarint() for _ in range(n)])
        width, depth = reader.varint(), reader.varint()
        if width < 1 or depth < 1:
            raise BadIndex("bad block geometry")
        top, top_base = [], []
        for _ in range(-(-n // width)):
            j, off, delta, base = reader.varint(), reader.varint(), reader.svarint(), reader.svarint()
            top.append((j, off, delta))
            top_base.append(base)
        levels = []
        for _ in range(depth - 1):
            rows = []
            for _ in range(r):
                mask = reader.take(1)[0]
                rows.append([
                    (reader.varint(), reader.varint(), reader.svarint(), reader.svarint())
                    if mask >> k & 1 else None
                    for k in range(7)
                ])
            levels.append(rows)
        leaves = []
        for _ in range(r):
            size = reader.varint()
            leaves.append([reader.svarint() for _ in range(size)])
        return cls(domain, n, anchors, alpha, width=width, depth=depth, top=top,
                   top_base=top_base, levels=levels, leaves=leaves)

    def __eq__(self, other) -> bool:
        return isinstance(other, RelativeBlocks) and vars(self) == vars(other)


class _CopyFinder:
    """Leftmost copy of a segment that touches some anchor's core."""

    def __init__(self, arr: np.ndarray, anchors: list[int], shift: int):
        self.arr = arr
        self.anchors = anchors
        self.shift = shift
        self.tables: dict[int, dict[bytes, int]] = {}

    def _table(self, h: int) -> dict[bytes, int]:
        table = self.tables.get(h)
        if table is not None:
            return table
        n = len(self.arr)
        starts = set()
        for a in self.anchors:
            lo = max(1, a + self.shift - h)
            hi = min(n - h + 1, a + self.shift)
            starts.update(range(lo, hi + 1))
        table = {}
        arr = self.arr
        for x in sorted(starts):
            table.setdefault(arr[x - 1 : x - 1 + h].tobytes(), x)
        self.tables[h] = table
        return table

    def copy_of(self, start: int, end: int) -> int:
        h = end - start + 1
        key = self.arr[start - 1 : end].tobytes()
        x = self._table(h).get(key)
        if x is None:
            raise AssertionError(f"no anchored copy of segment [{start}, {end}]")
        return x


def _differential(values: list[int]) -> list[int]:
    return [values[0]] + [b - a for a, b in zip(values, values[1:])]


def anchors_for(domain: str, structures: SuffixStructures) -> list[int]:
    bwt, sa = structures.bwt, structures.sa
    rows = [1] + [p + 1 for p in range(1, len(bwt)) if bwt[p] != bwt[p - 1]]
    if domain == DSA:
        return rows
    return sorted(sa[q - 1] for q in rows)


def build_blocks(domain: str, text: PreparedText, structures: SuffixStructures,
                 alpha: int | None = None) -> RelativeBlocks:
    anchors = anchors_for(domain, structures)
    if domain == TEXT:
        return RelativeBlocks.build(TEXT, list(text.symbols), None, anchors, alpha)
    absolute = structures.sa if domain == DSA else structures.isa
    return RelativeBlocks.build(domain, _differential(absolute), [0] + absolute, anchors, alpha)


class RelativeArrays:
    """Extraction and SA/ISA/LCP access over whichever block structures exist."""

    def __init__(self, byte_of: dict[int, int], blocks: dict[str, RelativeBlocks],
                 locate: LocateIndex | None = None):
        self.byte_of = byte_of
        self.blocks = blocks
        self.locate = locate

    def _get(self, domain: str) -> RelativeBlocks:
        b = self.blocks.get(domain)
        if b is None:
            raise SectionMissing(f"no {domain} block structure in this index")
        return b

    def extract(self, i: int, length: int) -> bytes:
        blocks = self._get(TEXT)
        if length == 0 and 1 <= i <= blocks.n:
            return b""
        if length < 0 or i < 1 or i + length - 1 > blocks.n - 1:
            raise OutOfRange(f"extract({i}, {length}) outside [1..{blocks.n - 1}]")
        return bytes(self.byte_of[c] for c in blocks.cells(i, length))

    def sa_at(self, p: int) -> int:
        return self._get(DSA).cells(p, 1)[0]

    def sa_range(self, p: int, length: int) -> list[int]:
        return self._get(DSA).cells(p, length)

    def isa_range(self, i: int, length: int) -> list[int]:
        return self._get(DISA).cells(i, length)

    def lcp_range(self, p: int, length: int) -> list[int]:
        """LCP by chunks of ``s``: one SA lookup, then a window read per chunk."""
        sa_blocks = self._get(DSA)
        if self.locate is None or self.locate.windows is None:
            raise WindowsNotBuilt("LCP access needs window tables")
        if length < 0 or p < 1 or p + length - 1 > sa_blocks.n:
            raise OutOfRange(f"range [{p}, {p + length - 1}] outside [1..{sa_blocks.n}]")
        s = self.locate.windows.s
        out = []
        end = p + length
        while p < end:
            chunk = min(s, end - p)
            value = sa_blocks.cells(p, 1)[0]
            out.extend(self.locate.plcp_window(value, -1, 1))
            out.extend(self.locate.plcp_window(value, 1, chunk - 1))
            p += chunk
        return out
