"""The complete index and its on-disk container.

File layout (all integers little-endian)::

    "RIDX" | version u32 | flags u32 | n u64 | r u64 | sigma u32
    section*                      tag (4 bytes) | length u64 | payload
    checksum u64                  blake2b-64 of every preceding byte

Sections appear in a fixed order (ALPH, RLBW, LOCT, then the optional WIND,
BTXT, BDSA, BISA). Unknown tags are skipped, so newer writers stay readable.
"""

from __future__ import annotations

import hashlib
import math
import struct
from dataclasses import dataclass, field
from pathlib import Path

from .codec import Reader
from .errors import BadIndex
from .locate import LocateIndex, Range, Toehold, WindowTables
from .relative import DISA, DSA, TEXT, RelativeArrays, RelativeBlocks, build_blocks
from .rlfm import RunLengthBWT
from .text import build_structures, prepare_text

MAGIC = b"RIDX"
FORMAT_VERSION = 1
HEADER = struct.Struct("<4sIIQQI")
TRAILER_SIZE = 8

FLAG_WINDOWS = 1
BLOCK_FLAGS = {TEXT: 2, DSA: 4, DISA: 8}
BLOCK_TAGS = {TEXT: b"BTXT", DSA: b"BDSA", DISA: b"BISA"}


def lcp_window_width(n: int, r: int) -> int:
    return max(1, math.ceil(math.log2(max(n / r, 1))))


def checksum(data: bytes) -> bytes:
    return hashlib.blake2b(data, digest_size=8).digest()


@dataclass
class RIndex:
    sigma: int
    byte_of: dict[int, int]
    locator: LocateIndex
    blocks: dict[str, RelativeBlocks] = field(default_factory=dict)

    @classmethod
    def build(cls, raw: bytes, windows: int | None = None, blocks=(),
              alpha: int | None = None) -> "RIndex":
        """Build from raw bytes.

        ``blocks`` may name ``text``, ``sa``, ``isa`` and ``lcp``; ``lcp``
        implies ``sa`` plus window tables of width ``ceil(log2(n/r))`` unless
        ``windows`` is given explicitly.
        """
        text = prepare_text(raw)
        st = build_structures(text)
        wanted = set(blocks)
        if "lcp" in wanted:
            wanted.discard("lcp")
            wanted.add(DSA)
            if not windows:
                runs = 1 + sum(a != b for a, b in zip(st.bwt, st.bwt[1:]))
                windows = lcp_window_width(text.n, runs)
        unknown = wanted - set(BLOCK_TAGS)
        if unknown:
            raise ValueError(f"unknown block domains: {sorted(unknown)}")
        locator = LocateIndex.build(text, st, windows)
        built = {d: build_blocks(d, text, st, alpha) for d in BLOCK_TAGS if d in wanted}
        return cls(text.sigma, dict(text.byte_of), locator, built)

    @property
    def n(self) -> int:
        return self.locator.n

    @property
    def r(self) -> int:
        return self.locator.r

    @property
    def arrays(self) -> RelativeArrays:
        return RelativeArrays(self.byte_of, self.blocks, self.locator)

    # queries
    def count(self, pattern: bytes) -> Range | None:
        return self.locator.count(pattern)

    def count_with_toehold(self, pattern: bytes) -> Toehold | None:
        return self.locator.count_with_toehold(pattern)

    def locate(self, pattern: bytes) -> list[int]:
        return self.locator.locate(pattern)

    def extract(self, i: int, length: int) -> bytes:
        return self.arrays.extract(i, length)

    def sa_range(self, p: int, length: int) -> list[int]:
        return self.arrays.sa_range(p, length)

    def isa_range(self, i: int, length: int) -> list[int]:
        return self.arrays.isa_range(i, length)

    def lcp_range(self, p: int, length: int) -> list[int]:
        return self.arrays.lcp_range(p, length)

    # serialization
    def flags(self) -> int:
        f = FLAG_WINDOWS if self.locator.windows is not None else 0
        for d in self.blocks:
            f |= BLOCK_FLAGS[d]
        return f

    def sections(self) -> list[tuple[bytes, bytes]]:
        alph = bytearray(self.byte_of[c] for c in range(2, self.sigma + 1))
        rl = bytearray()
        self.locator.rlbwt.to_bytes(rl)
        loc = bytearray()
        self.locator.to_bytes(loc)
        out = [(b"ALPH", bytes(alph)), (b"RLBW", bytes(rl)), (b"LOCT", bytes(loc))]
        if self.locator.windows is not None:
            buf = bytearray()
            self.locator.windows.to_bytes(buf)
            out.append((b"WIND", bytes(buf)))
        for d, tag in BLOCK_TAGS.items():
            if d in self.blocks:
                buf = bytearray()
                self.blocks[d].to_bytes(buf)
                out.append((tag, bytes(buf)))
        return out

    def to_bytes(self) -> bytes:
        out = bytearray(HEADER.pack(MAGIC, FORMAT_VERSION, self.flags(), self.n, self.r, self.sigma))
        for tag, payload in self.sections():
            out += tag + struct.pack("<Q", len(payload)) + payload
        out += checksum(bytes(out))
        return bytes(out)

    @classmethod
    def from_bytes(cls, data: bytes) -> "RIndex":
        if len(data) < HEADER.size + TRAILER_SIZE:
            raise BadIndex("file too short")
        body, trailer = data[:-TRAILER_SIZE], data[-TRAILER_SIZE:]
        if checksum(body) != trailer:
            raise BadIndex("checksum mismatch")
        magic, version, flags, n, r, sigma = HEADER.unpack_from(body)
        if magic != MAGIC:
            raise BadIndex("not an index file")
        if version != FORMAT_VERSION:
            raise BadIndex(f"unsupported format version {version}")
        reader = Reader(body, HEADER.size)
        sections = {}
        while not reader.done():
            tag = reader.take(4)
            size = reader.u64()
            sections[tag] = Reader(body, reader.pos, reader.pos + size)
            reader.take(size)
        for tag in (b"ALPH", b"RLBW", b"LOCT"):
            if tag not in sections:
                raise BadIndex(f"missing section {tag.decode()}")
        alph = sections[b"ALPH"].take(sigma - 1)
        byte_of = {c: b for c, b in enumerate(alph, start=2)}
        code_of = {b: c for c, b in byte_of.items()}
        rlbwt = RunLengthBWT.read(sections[b"RLBW"])
        locator = LocateIndex.read(sections[b"LOCT"], rlbwt, code_of)
        if b"WIND" in sections:
            locator.windows = WindowTables.read(sections[b"WIND"])
        blocks = {d: RelativeBlocks.read(sections[tag])
                  for d, tag in BLOCK_TAGS.items() if tag in sections}
        if (rlbwt.n, rlbwt.r, rlbwt.sigma) != (n, r, sigma):
            raise BadIndex("header does not match run-length BWT")
        index = cls(sigma, byte_of, locator, blocks)
        if index.flags() != flags:
            raise BadIndex("section flags do not match sections present")
        return index

    def save(self, path) -> int:
        data = self.to_bytes()
        Path(path).write_bytes(data)
        return len(data)

    @classmethod
    def load(cls, path) -> "RIndex":
        return cls.from_bytes(Path(path).read_bytes())


def size_report(data: bytes) -> dict:
    """Per-section bit counts of a serialized index plus the budget formula.

    The budget is ``(1+eps) r (log2(n/r) + 2) + 2 r log2 n + r log2 sigma``
    bits with ``eps = 0.5``; ``total_bits`` excludes header and checksum.
    """
    index_header = HEADER.unpack_from(data)
    _, _, _, n, r, sigma = index_header
    reader = Reader(data, HEADER.size, len(data) - TRAILER_SIZE)
    sections = []
    while not reader.done():
        tag = reader.take(4)
        size = reader.u64()
        reader.take(size)
        sections.append((tag.decode(), (12 + size) * 8))
    formula = 1.5 * r * (math.log2(n / r) + 2) + 2 * r * math.log2(n) + r * math.log2(sigma) if n > 1 else 0.0
    total = sum(bits for _, bits in sections)
    return {
        "n": n, "r": r, "sigma": sigma,
        "file_bits": len(data) * 8,
        "overhead_bits": (HEADER.size + TRAILER_SIZE) * 8,
        "total_bits": total,
        "sections": sections,
        "bits_per_symbol": len(data) * 8 / n,
        "formula_bits": formula,
    }
