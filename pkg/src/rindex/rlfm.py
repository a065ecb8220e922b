"""Run-length FM-index: the BWT stored as ``r`` runs.

``E`` marks run starts in ``[1..n]``, ``Lp[k]`` is the symbol of run ``k``,
``D`` holds cumulative run lengths after stably sorting runs by symbol, and
``Cp[c]`` counts runs of symbols smaller than ``c``. With those,
``D[Cp[c] + rank_c(Lp, k - 1)]`` equals ``C[c]`` plus the occurrences of
``c`` in runs ``1..k-1``, which gives both rank and LF.
"""

from __future__ import annotations

from bisect import bisect_left

from .codec import Reader, pack_ints, write_varint
from .errors import BadIndex, OutOfRange
from .sparse_bits import SparseBits


class RunLengthBWT:
    def __init__(self, n: int, sigma: int, E: SparseBits, Lp: list[int], D: list[int],
                 C: list[int], Cp: list[int]):
        self.n = n
        self.sigma = sigma
        self.E = E
        self.Lp = Lp  # 1-based: Lp[0] is unused
        self.D = D
        self.C = C
        self.Cp = Cp
        self.r = len(Lp) - 1
        self.occ_lists: list[list[int]] = [[] for _ in range(sigma + 1)]
        # run_rank[k] = rank of Lp[k] in Lp[1..k]; the recorded partial ranks for LF
        self.run_rank = [0] * (self.r + 1)
        for k in range(1, self.r + 1):
            lst = self.occ_lists[Lp[k]]
            lst.append(k)
            self.run_rank[k] = len(lst)

    @classmethod
    def from_bwt(cls, bwt, sigma: int) -> "RunLengthBWT":
        bwt = list(bwt)
        n = len(bwt)
        if not n:
            raise ValueError("empty BWT")
        starts = [1]
        Lp = [0, bwt[0]]
        for p in range(1, n):
            if bwt[p] != bwt[p - 1]:
                starts.append(p + 1)
                Lp.append(bwt[p])
        r = len(starts)
        lengths = [b - a for a, b in zip(starts, starts[1:] + [n + 1])]
        C = [0] * (sigma + 2)
        Cp = [0] * (sigma + 2)
        for k in range(r):
            C[Lp[k + 1] + 1] += lengths[k]
            Cp[Lp[k + 1] + 1] += 1
        for c in range(1, sigma + 2):
            C[c] += C[c - 1]
            Cp[c] += Cp[c - 1]
        order = sorted(range(r), key=lambda k: Lp[k + 1])  # stable
        D = [0] * (r + 1)
        for j, k in enumerate(order, start=1):
            D[j] = D[j - 1] + lengths[k]
        return cls(n, sigma, SparseBits(starts, n), Lp, D, C, Cp)

    def _check(self, p: int) -> None:
        if not 1 <= p <= self.n:
            raise OutOfRange(f"row {p} outside [1..{self.n}]")

    def run_of(self, p: int) -> int:
        self._check(p)
        return self.E.rank1(p)

    def run_start(self, k: int) -> int:
        return self.E.positions[k - 1]

    def run_end(self, k: int) -> int:
        return self.E.positions[k] - 1 if k < self.r else self.n

    def access(self, p: int) -> int:
        return self.Lp[self.run_of(p)]

    def rank(self, c: int, p: int) -> int:
        if p == 0:
            return 0
        if not 1 <= c <= self.sigma:
            raise OutOfRange(f"symbol {c} outside [1..{self.sigma}]")
        k = self.run_of(p)
        before = bisect_left(self.occ_lists[c], k)
        count = self.D[self.Cp[c] + before] - self.C[c]
        if self.Lp[k] == c:
            count += p - self.run_start(k) + 1
        return count

    def lf(self, p: int) -> int:
        k = self.run_of(p)
        c = self.Lp[k]
        return self.D[self.Cp[c] + self.run_rank[k] - 1] + p - self.run_start(k) + 1

    def backward_step(self, c: int, sp: int, ep: int) -> tuple[int, int] | None:
        """One backward-search step; ``None`` when the new range is empty."""
        if not 1 <= c <= self.sigma:
            return None
        base = self.C[c]
        nsp = base + self.rank(c, sp - 1) + 1
        nep = base + self.rank(c, ep)
        return (nsp, nep) if nsp <= nep else None

    def last_run_at_or_before(self, c: int, k: int) -> int | None:
        """Index of the last run of symbol ``c`` whose index is <= ``k``."""
        lst = self.occ_lists[c]
        j = bisect_left(lst, k + 1)
        return lst[j - 1] if j else None

    def to_bwt(self) -> list[int]:
        out = []
        for k in range(1, self.r + 1):
            out.extend([self.Lp[k]] * (self.run_end(k) - self.run_start(k) + 1))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, RunLengthBWT) and (
            self.n, self.sigma, self.E, self.Lp, self.D, self.C, self.Cp
        ) == (other.n, other.sigma, other.E, other.Lp, other.D, other.C, other.Cp)

    def to_bytes(self, out: bytearray) -> None:
        write_varint(out, self.r)
        write_varint(out, self.sigma)
        self.E.to_bytes(out)
        pack_ints(out, self.Lp[1:])
        pack_ints(out, self.D)
        pack_ints(out, self.C)
        pack_ints(out, self.Cp)

    @classmethod
    def read(cls, reader: Reader) -> "RunLengthBWT":
        r = reader.varint()
        sigma = reader.varint()
        E = SparseBits.read(reader)
        Lp = [0] + reader.packed()
        D, C, Cp = reader.packed(), reader.packed(), reader.packed()
        if len(E) != r or len(Lp) != r + 1 or len(D) != r + 1 or len(C) != sigma + 2:
            raise BadIndex("inconsistent run-length BWT section")
        return cls(E.universe, sigma, E, Lp, D, C, Cp)
