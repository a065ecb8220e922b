"""Oracle acceptance suite, shared by ``rindex selftest`` and the pytest suite.

Every check compares the index against independent brute-force oracles
(exhaustive suffix sorting, pairwise LCP scans, ``bytes.find`` scans).
Each ``check_*`` helper returns a list of failure messages (empty = pass).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .corpus import CorpusSpec, desk_texts, generate, oracle_corpus
from .errors import BadIndex
from .index import RIndex, lcp_window_width, size_report
from .locate import LocateIndex
from .relative import DOMAINS, RelativeArrays, build_blocks
from .text import build_structures, naive_lcp, naive_locate, naive_sa, prepare_text

MAX_FAILS = 5


@dataclass
class Oracle:
    raw: bytes
    symbols: tuple
    sa: list
    isa: list
    lcp: list
    bwt: list

    @classmethod
    def of(cls, raw: bytes) -> "Oracle":
        text = prepare_text(raw)
        sa = naive_sa(text.symbols)
        isa = [0] * len(sa)
        for p, i in enumerate(sa, start=1):
            isa[i - 1] = p
        bwt = [text.symbols[i - 2] for i in sa]  # index -1 wraps to the terminator
        return cls(raw, text.symbols, sa, isa, naive_lcp(text.symbols, sa), bwt)

    @property
    def n(self) -> int:
        return len(self.sa)

    def run_starts(self) -> list[int]:
        b = self.bwt
        return [1] + [p + 1 for p in range(1, len(b)) if b[p] != b[p - 1]]


@dataclass
class Result:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.name} ({self.seconds:.1f}s) {self.detail}"


def _fail(fails: list, msg: str) -> None:
    if len(fails) < MAX_FAILS:
        fails.append(msg)


def distinct_substrings(raw: bytes, max_len: int) -> list[bytes]:
    out = set()
    for ell in range(1, max_len + 1):
        for i in range(len(raw) - ell + 1):
            out.add(raw[i : i + ell])
    return sorted(out)


def absent_patterns(raw: bytes, count: int, rng: random.Random) -> list[bytes]:
    letters = sorted(set(raw)) or [ord("a")]
    pool = letters + [ord("Z")] if ord("Z") not in letters else letters + [ord("Y")]
    out = []
    while len(out) < count:
        length = rng.randint(1, 10)
        # mostly in-alphabet so that backward search runs for a while first
        syms = pool if rng.random() < 0.3 else letters
        pat = bytes(rng.choice(syms) for _ in range(length))
        if raw.find(pat) < 0:
            out.append(pat)
    return out


# -- individual checks ------------------------------------------------------


def check_count_locate(index, oracle: Oracle, patterns) -> list[str]:
    fails = []
    text = prepare_text(oracle.raw)
    for pat in patterns:
        expected = naive_locate(text, pat)
        rng = index.count(pat)
        occ = rng.occ if rng else 0
        got = index.locate(pat)
        if occ != len(expected) or sorted(got) != expected:
            _fail(fails, f"pattern {pat!r}: count={occ} locate={sorted(got)[:5]} expected {expected[:5]}")
    return fails


def check_toehold(index, oracle: Oracle, patterns) -> list[str]:
    fails = []
    text = prepare_text(oracle.raw)
    locator = index.locator if isinstance(index, RIndex) else index
    for pat in patterns:
        if not naive_locate(text, pat):
            continue
        trace = []
        hold = locator.count_with_toehold(pat, trace)
        if hold is None:
            _fail(fails, f"{pat!r}: no toehold for an occurring pattern")
            continue
        sp, ep = hold.range.sp, hold.range.ep
        if not (sp <= hold.row <= ep and oracle.sa[hold.row - 1] == hold.value):
            _fail(fails, f"{pat!r}: toehold ({hold.row}, {hold.value}) outside [{sp}, {ep}]")
        for tsp, tep, row, value in trace:
            if not (tsp <= row <= tep and oracle.sa[row - 1] == value):
                _fail(fails, f"{pat!r}: intermediate toehold ({row}, {value}) wrong")
                break
    return fails


def check_lf_phi(locator: LocateIndex, oracle: Oracle) -> list[str]:
    fails = []
    n, sa = oracle.n, oracle.sa
    rl = locator.rlbwt
    for p in range(1, n + 1):
        q = rl.lf(p)
        want = sa[p - 1] - 1 if sa[p - 1] > 1 else n
        if sa[q - 1] != want:
            _fail(fails, f"SA[lf({p})] = {sa[q - 1]}, expected {want}")
        if rl.access(p) != oracle.bwt[p - 1]:
            _fail(fails, f"access({p}) wrong")
    seen = set()
    p = 1
    for _ in range(n):
        seen.add(p)
        p = rl.lf(p)
    if p != 1 or len(seen) != n:
        _fail(fails, "LF is not a single cycle of length n")
    for p in range(2, n + 1):
        if locator.phi(sa[p - 1]) != sa[p - 2]:
            _fail(fails, f"phi(SA[{p}]) = {locator.phi(sa[p - 1])}, expected {sa[p - 2]}")
    if locator.phi(sa[0]) != sa[-1]:
        _fail(fails, "phi(SA[1]) != SA[n]")
    return fails


def check_windows(locator: LocateIndex, oracle: Oracle) -> list[str]:
    fails = []
    n, sa, lcp = oracle.n, oracle.sa, oracle.lcp
    s = locator.windows.s
    for p in range(1, n + 1):
        x = sa[p - 1]
        for count in range(s + 1):
            fwd = [sa[p + j - 1] for j in range(1, count + 1) if p + j <= n]
            bwd = [sa[p - j - 1] for j in range(1, count + 1) if p - j >= 1]
            lf = [lcp[p + j - 1] for j in range(1, count + 1) if p + j <= n]
            lb = [lcp[p - j] for j in range(1, count + 1) if p - j + 1 >= 1]
            got = (locator.sa_window(x, 1, count), locator.sa_window(x, -1, count),
                   locator.plcp_window(x, 1, count), locator.plcp_window(x, -1, count))
            if got != (fwd, bwd, lf, lb):
                _fail(fails, f"s={s} p={p} count={count}: {got} != {(fwd, bwd, lf, lb)}")
    return fails


def check_arrays(arrays: RelativeArrays, oracle: Oracle, exhaustive: bool = True) -> list[str]:
    fails = []
    n = oracle.n
    if arrays.sa_range(1, n) != oracle.sa:
        _fail(fails, "sa_range(1, n) differs from SA")
    if arrays.isa_range(1, n) != oracle.isa:
        _fail(fails, "isa_range(1, n) differs from ISA")
    if arrays.lcp_range(1, n) != oracle.lcp:
        _fail(fails, "lcp_range(1, n) differs from LCP")
    if arrays.extract(1, n - 1) != oracle.raw:
        _fail(fails, "extract(1, n-1) differs from the text")
    if not exhaustive:
        return fails
    for p in range(1, n + 1):
        for length in (1, 3):
            if p + length - 1 > n:
                continue
            if arrays.sa_range(p, length) != oracle.sa[p - 1 : p - 1 + length]:
                _fail(fails, f"sa_range({p}, {length}) wrong")
            if arrays.isa_range(p, length) != oracle.isa[p - 1 : p - 1 + length]:
                _fail(fails, f"isa_range({p}, {length}) wrong")
            if arrays.lcp_range(p, length) != oracle.lcp[p - 1 : p - 1 + length]:
                _fail(fails, f"lcp_range({p}, {length}) wrong")
    for i in range(1, n):
        for length in range(0, min(16, n - i) + 1):
            if arrays.extract(i, length) != oracle.raw[i - 1 : i - 1 + length]:
                _fail(fails, f"extract({i}, {length}) wrong")
    return fails


def check_anchored_copies(oracle: Oracle, max_s: int = 8) -> list[str]:
    """Copy-crossing-anchor properties of DSA, DISA and T, plus the s-mer bound."""
    fails = []
    n, sa, isa = oracle.n, oracle.sa, oracle.isa
    T = oracle.symbols
    starts = oracle.run_starts()
    r = len(starts)
    is_start = [False] * (n + 2)
    for q in starts:
        is_start[q] = True
    is_phrase = [False] * (n + 2)
    for q in starts:
        is_phrase[sa[q - 1]] = True
    dsa = [sa[0]] + [sa[p] - sa[p - 1] for p in range(1, n)]
    disa = [isa[0]] + [isa[i] - isa[i - 1] for i in range(1, n)]

    def crossing(marks, p, s):
        return any(marks[x] for x in range(max(1, p - 1), p + s + 1))

    def expect_copies(name, arr, marks, s, lo_shift):
        # windows cover positions [p-1..p+s]; the compared cells are
        # arr[p+lo_shift .. p+s+lo_shift] (1-based)
        copies: dict[tuple, list[int]] = {}
        for q in range(2, n - s + 1):
            if crossing(marks, q, s):
                key = tuple(arr[q - 1 + lo_shift : q + s + lo_shift])
                lst = copies.setdefault(key, [])
                if len(lst) < 2:
                    lst.append(q)
        for p in range(2, n - s + 1):
            if any(marks[x] for x in range(p, p + s + 1)):
                continue
            key = tuple(arr[p - 1 + lo_shift : p + s + lo_shift])
            if not any(q != p for q in copies.get(key, [])):
                _fail(fails, f"{name}: window p={p} s={s} has no anchored copy")

    for s in range(0, max_s + 1):
        expect_copies("DSA", dsa, is_start, s, 0)
        expect_copies("DISA", disa, is_phrase, s, 0)
        expect_copies("T", T, is_phrase, s, -1)
    for s in (1, 2, 4, 8):
        distinct = {tuple(T[i : i + s]) for i in range(n - s + 1)}
        if len(distinct) > 2 * r * s:
            _fail(fails, f"{len(distinct)} distinct {s}-mers > 2rs = {2 * r * s}")
    return fails


def check_primary_occurrences(oracle: Oracle, max_len: int = 8) -> list[str]:
    """Every distinct substring has an occurrence covering a sampled character."""
    fails = []
    n, sa = oracle.n, oracle.sa
    T = oracle.symbols
    sampled = set()
    bwt = oracle.bwt
    for p in range(1, n + 1):
        first = p == 1 or bwt[p - 1] != bwt[p - 2]
        last = p == n or bwt[p - 1] != bwt[p]
        if first or last:
            sampled.add(sa[p - 1] - 1 if sa[p - 1] > 1 else n)
    for ell in range(1, max_len + 1):
        covered = set()
        for x in sampled:
            for i in range(max(1, x - ell + 1), min(x, n - ell + 1) + 1):
                covered.add(T[i - 1 : i - 1 + ell])
        for i in range(n - ell + 1):
            if T[i : i + ell] not in covered:
                _fail(fails, f"substring at {i + 1} of length {ell} has no primary occurrence")
                break
    return fails


# -- criteria -----------------------------------------------------------------


def _timed(number, name, fn) -> Result:
    start = time.perf_counter()
    fails, detail = fn()
    elapsed = time.perf_counter() - start
    return Result(number, name, not fails, "; ".join(fails) if fails else detail, elapsed)


def corpus_criteria(texts: list[bytes], max_len: int = 6, absent: int = 50,
                    seed: int = 11) -> list[Result]:
    """Criteria 1-3 in one pass over the corpus (they share oracles)."""
    rng = random.Random(seed)
    fails = {1: [], 2: [], 3: []}
    seconds = {1: 0.0, 2: 0.0, 3: 0.0}
    totals = {"patterns": 0, "texts": 0}
    for raw in texts:
        t0 = time.perf_counter()
        index = RIndex.build(raw)
        oracle = Oracle.of(raw)
        patterns = [b""] + distinct_substrings(raw, max_len) + absent_patterns(raw, absent, rng)
        totals["patterns"] += len(patterns)
        totals["texts"] += 1
        t1 = time.perf_counter()
        fails[1] += check_count_locate(index, oracle, patterns)
        t2 = time.perf_counter()
        fails[2] += check_lf_phi(index.locator, oracle)
        t3 = time.perf_counter()
        fails[3] += check_toehold(index, oracle, patterns)
        t4 = time.perf_counter()
        seconds[1] += t2 - t1 + (t1 - t0)
        seconds[2] += t3 - t2
        seconds[3] += t4 - t3
    detail = f"{totals['texts']} texts, {totals['patterns']} patterns"
    names = {1: "count/locate equal naive scan", 2: "LF and phi invariants",
             3: "toehold validity"}
    return [Result(k, names[k], not fails[k][:MAX_FAILS],
                   "; ".join(fails[k][:MAX_FAILS]) or detail, seconds[k]) for k in (1, 2, 3)]


def criterion_4(texts) -> Result:
    def run():
        fails = []
        for raw in texts:
            text = prepare_text(raw)
            st = build_structures(text)
            oracle = Oracle.of(raw)
            for s in (1, 2, 4, 8):
                fails += check_windows(LocateIndex.build(text, st, s), oracle)
        return fails[:MAX_FAILS], f"{len(texts)} texts, s in 1,2,4,8"
    return _timed(4, "sa/plcp windows equal oracle", run)


def criterion_5(texts, alphas=(None, 1, 2)) -> Result:
    def run():
        fails = []
        for raw in texts:
            text = prepare_text(raw)
            st = build_structures(text)
            oracle = Oracle.of(raw)
            r = len(oracle.run_starts())
            locator = LocateIndex.build(text, st, lcp_window_width(text.n, r))
            for alpha in alphas:
                blocks = {d: build_blocks(d, text, st, alpha) for d in DOMAINS}
                arrays = RelativeArrays(text.byte_of, blocks, locator)
                fails += check_arrays(arrays, oracle, exhaustive=alpha is None)
        return fails[:MAX_FAILS], f"{len(texts)} texts, alpha in {alphas}"
    return _timed(5, "relative block access equals oracle", run)


def criterion_6(texts) -> Result:
    def run():
        fails = []
        for raw in texts:
            oracle = Oracle.of(raw)
            fails += check_anchored_copies(oracle)
            fails += check_primary_occurrences(oracle)
        return fails[:MAX_FAILS], f"{len(texts)} texts"
    return _timed(6, "anchored copies and s-mer bound", run)


def compression_corpus(copies: int, rng_seed: int = 2018) -> bytes:
    return generate(CorpusSpec("mutated-copies", 1000, copies, 1e-3, b"ACGT", rng_seed))


def criterion_7() -> Result:
    def run():
        runs = {}
        sizes = {}
        for copies in (1, 10, 100):
            index = RIndex.build(compression_corpus(copies))
            runs[copies], sizes[copies] = index.r, index.n
        ratio = runs[100] / sizes[100]
        growth = runs[100] / runs[10]
        fails = []
        if not ratio < 0.02:
            fails.append(f"r/n = {ratio:.4f} for 100 copies (limit 0.02)")
        if not growth < 3:
            fails.append(f"r(100)/r(10) = {growth:.3f} (limit 3)")
        detail = (f"r = {runs[1]}/{runs[10]}/{runs[100]} for 1/10/100 copies; "
                  f"r/n = {ratio:.4f}; r(100)/r(10) = {growth:.3f}")
        return fails, detail
    return _timed(7, "scaled compression trend", run)


def criterion_8() -> Result:
    def run():
        data = RIndex.build(compression_corpus(100)).to_bytes()
        rep = size_report(data)
        bits = len(data) * 8
        ratio = bits / rep["formula_bits"]
        detail = f"{bits} bits vs formula {rep['formula_bits']:.0f} (ratio {ratio:.3f}, limit 4)"
        return ([] if ratio <= 4 else [detail]), detail
    return _timed(8, "baseline size within 4x budget formula", run)


def criterion_9(fixtures) -> Result:
    def run():
        fails = []
        rng = random.Random(5)
        for raw in fixtures:
            oracle = Oracle.of(raw)
            r = len(oracle.run_starts())
            index = RIndex.build(raw, windows=max(8, lcp_window_width(oracle.n, r)),
                                 blocks=("text", "sa", "isa", "lcp"))
            data = index.to_bytes()
            loaded = RIndex.from_bytes(data)
            if loaded.to_bytes() != data:
                _fail(fails, "re-serialized index differs")
            patterns = [b""] + distinct_substrings(raw, 6) + absent_patterns(raw, 50, rng)
            for pat in patterns:
                a, b = index.count_with_toehold(pat), loaded.count_with_toehold(pat)
                if a != b or index.locate(pat) != loaded.locate(pat):
                    _fail(fails, f"{pat!r}: loaded index answers differently")
            fails += check_count_locate(loaded, oracle, patterns)
            fails += check_lf_phi(loaded.locator, oracle)
            fails += check_toehold(loaded, oracle, patterns)
            fails += check_windows(loaded.locator, oracle)
            fails += check_arrays(loaded.arrays, oracle)
            for d in DOMAINS:
                if loaded.blocks[d] != index.blocks[d]:
                    _fail(fails, f"{d} blocks differ after reload")
            corrupt = bytearray(data)
            corrupt[len(corrupt) // 2] ^= 0x10
            try:
                RIndex.from_bytes(bytes(corrupt))
                _fail(fails, "corrupted index was accepted")
            except BadIndex:
                pass
        return fails[:MAX_FAILS], f"{len(fixtures)} fixtures round-tripped, corruption rejected"
    return _timed(9, "serialization round-trip", run)


def fixture_texts() -> list[bytes]:
    return [
        b"mississippi",
        generate(CorpusSpec("mutated-copies", 60, 20, 0.01, b"ACGT", 3)),
        generate(CorpusSpec("random", 400, 1, 0.0, b"abcdefgh", 4)),
    ]


def run_all(quick: bool = False, progress=None) -> list[Result]:
    if quick:
        corpus = oracle_corpus(count=28, max_n=300)
        desk = [t for t in desk_texts() if len(t) <= 300]
    else:
        corpus = oracle_corpus()
        desk = desk_texts()
    results = []

    def add(items):
        for res in items:
            results.append(res)
            if progress:
                progress(res)

    add(corpus_criteria(corpus))
    add([criterion_4(desk)])
    add([criterion_5(desk)])
    add([criterion_6(desk)])
    add([criterion_7(), criterion_8()])
    add([criterion_9(fixture_texts())])
    return results


__all__ = ["run_all", "Result", "Oracle"]
