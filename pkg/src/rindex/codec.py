"""Byte-level encodings used by the index file: varints, zigzag, packed ints."""

from __future__ import annotations

import struct

import numpy as np

from .errors import BadIndex


def bit_width(max_value: int) -> int:
    """Bits needed to store values in ``[0..max_value]`` (at least 1)."""
    return max(1, int(max_value).bit_length())


def write_varint(out: bytearray, value: int) -> None:
    if value < 0:
        raise ValueError("varint must be non-negative")
    while value >= 0x80:
        out.append((value & 0x7F) | 0x80)
        value >>= 7
    out.append(value)


def zigzag(value: int) -> int:
    return value * 2 if value >= 0 else -value * 2 - 1


def unzigzag(value: int) -> int:
    return value >> 1 if not value & 1 else -((value + 1) >> 1)


class Reader:
    """Cursor over a bytes buffer; every read is bounds-checked."""

    def __init__(self, data: bytes, pos: int = 0, end: int | None = None):
        self.data = memoryview(data)
        self.pos = pos
        self.end = len(data) if end is None else end

    def take(self, size: int) -> bytes:
        if size < 0 or self.pos + size > self.end:
            raise BadIndex("truncated data")
        chunk = bytes(self.data[self.pos : self.pos + size])
        self.pos += size
        return chunk

    def u32(self) -> int:
        return struct.unpack("<I", self.take(4))[0]

    def u64(self) -> int:
        return struct.unpack("<Q", self.take(8))[0]

    def varint(self) -> int:
        shift = 0
        value = 0
        while True:
            if self.pos >= self.end:
                raise BadIndex("truncated varint")
            byte = self.data[self.pos]
            self.pos += 1
            value |= (byte & 0x7F) << shift
            if byte < 0x80:
                return value
            shift += 7
            if shift > 70:
                raise BadIndex("varint too long")

    def svarint(self) -> int:
        return unzigzag(self.varint())

    def varints(self, count: int) -> list[int]:
        return [self.varint() for _ in range(count)]

    def packed(self) -> list[int]:
        return unpack_ints(self)

    def done(self) -> bool:
        return self.pos >= self.end


def write_varints(out: bytearray, values) -> None:
    for v in values:
        write_varint(out, v)


def pack_ints(out: bytearray, values) -> None:
    """Append ``count, width, payload`` with each value in ``width`` bits, LSB first."""
    arr = np.asarray(list(values), dtype=np.uint64)
    count = len(arr)
    width = bit_width(int(arr.max())) if count else 1
    write_varint(out, count)
    out.append(width)
    if not count:
        return
    shifts = np.arange(width, dtype=np.uint64)
    bits = ((arr[:, None] >> shifts) & np.uint64(1)).astype(np.uint8).ravel()
    out += np.packbits(bits, bitorder="little").tobytes()


def unpack_ints(reader: Reader) -> list[int]:
    count = reader.varint()
    width = reader.take(1)[0]
    if not count:
        return []
    if not 1 <= width <= 64:
        raise BadIndex(f"bad packed width {width}")
    nbytes = (count * width + 7) // 8
    bits = np.unpackbits(np.frombuffer(reader.take(nbytes), dtype=np.uint8), bitorder="little")
    bits = bits[: count * width].reshape(count, width).astype(np.uint64)
    values = (bits << np.arange(width, dtype=np.uint64)).sum(axis=1, dtype=np.uint64)
    return values.tolist()
