"""Synthetic repetitive corpora and the fixed desk-scale text set."""

from __future__ import annotations

import string
from dataclasses import dataclass
from pathlib import Path

import numpy as np

KINDS = ("mutated-copies", "random", "file")


@dataclass(frozen=True)
class CorpusSpec:
    """How to generate a corpus.

    ``mutated-copies``: a random seed string followed by ``copies - 1``
    copies of it, each character independently replaced (by a different
    symbol) with probability ``mutation_rate``. ``random``: ``seed_len *
    copies`` uniform symbols. ``file``: like ``mutated-copies`` but the seed
    is read from ``source`` (truncated to ``seed_len`` when positive).
    """

    kind: str = "mutated-copies"
    seed_len: int = 1000
    copies: int = 1
    mutation_rate: float = 0.0
    alphabet: bytes = b"ACGT"
    rng_seed: int = 0
    source: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown corpus kind {self.kind!r}")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ValueError("mutation_rate must lie in [0, 1]")
        if self.copies < 1 or self.seed_len < 0:
            raise ValueError("copies must be >= 1 and seed_len >= 0")
        if not self.alphabet or 0 in self.alphabet:
            raise ValueError("alphabet must be non-empty and exclude byte 0")


def generate(spec: CorpusSpec) -> bytes:
    rng = np.random.default_rng(spec.rng_seed)
    alphabet = np.unique(np.frombuffer(bytes(spec.alphabet), dtype=np.uint8))
    if spec.kind == "random":
        return alphabet[rng.integers(0, len(alphabet), spec.seed_len * spec.copies)].tobytes()
    if spec.kind == "file":
        if spec.source is None:
            raise ValueError("file corpus needs a source path")
        seed = np.frombuffer(Path(spec.source).read_bytes(), dtype=np.uint8)
        if spec.seed_len:
            seed = seed[: spec.seed_len]
        alphabet = np.unique(np.concatenate([alphabet, seed]))
    else:
        seed = alphabet[rng.integers(0, len(alphabet), spec.seed_len)]
    parts = [seed]
    sigma = len(alphabet)
    for _ in range(spec.copies - 1):
        copy = seed.copy()
        hit = rng.random(len(seed)) < spec.mutation_rate
        if sigma > 1 and hit.any():
            # shift by 1..sigma-1 so the replacement always differs
            idx = np.searchsorted(alphabet, copy[hit])
            idx = (idx + rng.integers(1, sigma, int(hit.sum()))) % sigma
            copy[hit] = alphabet[idx]
        parts.append(copy)
    return np.concatenate(parts).tobytes()


def letters(sigma: int) -> bytes:
    return string.ascii_lowercase[:sigma].encode()


def oracle_corpus(count: int = 224, max_n: int = 2000, rng_seed: int = 7) -> list[bytes]:
    """Texts for the count/locate equivalence sweeps.

    Cycles through alphabets of 2, 4, 16 and 26 letters and seven kinds:
    uniform random, and mutated copies with ``copies`` in {5, 20} and rate in
    {0, 0.001, 0.01}. Lengths are drawn uniformly so that ``n <= max_n``.
    """
    rng = np.random.default_rng(rng_seed)
    kinds = [("random", 1, 0.0)] + [
        ("mutated-copies", c, m) for c in (5, 20) for m in (0.0, 0.001, 0.01)
    ]
    out = []
    k = 0
    while len(out) < count:
        sigma = (2, 4, 16, 26)[k % 4]
        kind, copies, rate = kinds[(k // 4) % len(kinds)]
        total = int(rng.integers(1, max_n))
        seed_len = max(1, total // copies)
        spec = CorpusSpec(kind, seed_len, copies, rate, letters(sigma), int(rng.integers(2**31)))
        out.append(generate(spec))
        k += 1
    return out


def desk_texts() -> list[bytes]:
    """Small fixed texts used for exhaustive checks (n <= 2000)."""
    fixed = [
        b"", b"a", b"aaaa", b"ab", b"mississippi", b"banana", b"abracadabra",
        b"abababababababab", b"abcabcabcabcabcabcabc", b"the quick brown fox " * 12,
    ]
    specs = [
        CorpusSpec("random", 300, 1, 0.0, b"ab", 1),
        CorpusSpec("random", 500, 1, 0.0, letters(26), 2),
        CorpusSpec("random", 800, 1, 0.0, b"ACGT", 3),
        CorpusSpec("mutated-copies", 50, 20, 0.0, b"ACGT", 4),
        CorpusSpec("mutated-copies", 50, 20, 0.01, b"ACGT", 5),
        CorpusSpec("mutated-copies", 100, 20, 0.001, b"ACGT", 6),
        CorpusSpec("mutated-copies", 100, 10, 0.01, letters(16), 7),
        CorpusSpec("mutated-copies", 40, 50, 0.005, b"ab", 8),
        CorpusSpec("mutated-copies", 200, 10, 0.001, letters(26), 9),
        CorpusSpec("mutated-copies", 400, 5, 0.01, b"ACGT", 10),
        CorpusSpec("mutated-copies", 20, 100, 0.01, b"ACGT", 11),
        CorpusSpec("mutated-copies", 1, 300, 0.05, b"ab", 12),
    ]
    return fixed + [generate(s) for s in specs]
