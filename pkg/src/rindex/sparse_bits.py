"""Gap-encoded sparse bit sequence with rank, select, predecessor and successor.

The universe ``[1..u]`` is cut into ``t`` equal buckets (``t`` = number of set
bits); a dense directory records where each bucket's positions start, so a
query touches one bucket and binary-searches at most ``ceil(u / t)``
candidates.
"""

from __future__ import annotations

import struct
from bisect import bisect_right

from .codec import Reader, write_varint
from .errors import NotSorted, OutOfUniverse, RankOutOfRange


class SparseBits:
    __slots__ = ("universe", "positions", "width", "directory")

    def __init__(self, positions, universe: int):
        positions = list(positions)
        prev = 0
        for x in positions:
            if x <= prev:
                raise NotSorted(f"positions must be strictly increasing (saw {x} after {prev})")
            prev = x
        if positions and (positions[0] < 1 or positions[-1] > universe):
            raise OutOfUniverse(f"positions must lie in [1..{universe}]")
        self.universe = universe
        self.positions = positions
        t = len(positions)
        self.width = max(1, -(-universe // t)) if t else max(1, universe)
        nbuckets = -(-universe // self.width) if universe else 0
        directory = [0] * (nbuckets + 1)
        k = 0
        for b in range(nbuckets + 1):
            start = b * self.width + 1
            while k < t and positions[k] < start:
                k += 1
            directory[b] = k
        directory[nbuckets] = t
        self.directory = directory

    @classmethod
    def from_positions(cls, sorted_positions, universe: int) -> "SparseBits":
        return cls(sorted_positions, universe)

    def __len__(self) -> int:
        return len(self.positions)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseBits)
            and self.universe == other.universe
            and self.positions == other.positions
        )

    def _bucket(self, i: int) -> tuple[int, int]:
        b = (i - 1) // self.width
        return self.directory[b], self.directory[b + 1]

    def bucket_span(self, i: int) -> int:
        """Number of candidate positions a query at ``i`` binary-searches."""
        lo, hi = self._bucket(i)
        return hi - lo

    def rank1(self, i: int) -> int:
        if i == 0:
            return 0
        if not 0 < i <= self.universe:
            raise OutOfUniverse(f"rank1({i}) outside [0..{self.universe}]")
        lo, hi = self._bucket(i)
        return bisect_right(self.positions, i, lo, hi)

    def select1(self, k: int) -> int:
        if not 1 <= k <= len(self.positions):
            raise RankOutOfRange(f"select1({k}) with {len(self.positions)} set bits")
        return self.positions[k - 1]

    def pred(self, i: int) -> int | None:
        if not 0 < i <= self.universe:
            raise OutOfUniverse(f"pred({i}) outside [1..{self.universe}]")
        k = self.rank1(i)
        return self.positions[k - 1] if k else None

    def succ(self, i: int) -> int | None:
        if not 0 < i <= self.universe:
            raise OutOfUniverse(f"succ({i}) outside [1..{self.universe}]")
        k = self.rank1(i - 1)
        return self.positions[k] if k < len(self.positions) else None

    def to_bytes(self, out: bytearray) -> None:
        out += struct.pack("<QQ", self.universe, len(self.positions))
        prev = 0
        for x in self.positions:
            write_varint(out, x - prev)
            prev = x

    @classmethod
    def read(cls, reader: Reader) -> "SparseBits":
        universe = reader.u64()
        t = reader.u64()
        positions = []
        prev = 0
        for _ in range(t):
            prev += reader.varint()
            positions.append(prev)
        return cls(positions, universe)
