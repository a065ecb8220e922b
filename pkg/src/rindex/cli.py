"""Command-line front end: ``rindex <command> ...``."""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .corpus import KINDS, CorpusSpec, generate
from .errors import RIndexError
from .index import RIndex, size_report


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("RINDEX_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn, items):
    workers = _threads()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(workers) as pool:
        return list(pool.map(fn, items))


def _decode(token: bytes, hex_mode: bool) -> bytes:
    return bytes.fromhex(token.decode("ascii")) if hex_mode else token


def _patterns(args) -> list[bytes]:
    if args.patterns:
        lines = Path(args.patterns).read_bytes().split(b"\n")
        if lines and lines[-1] == b"":
            lines.pop()
        return [_decode(line, args.hex) for line in lines]
    if args.pattern is None:
        raise SystemExit("give a pattern or --patterns FILE")
    return [_decode(os.fsencode(args.pattern), args.hex)]


def _print_values(values) -> None:
    print(" ".join(map(str, values)))


def cmd_build(args) -> None:
    raw = Path(args.input).read_bytes()
    blocks = set()
    for item in args.blocks or []:
        blocks.update(x for x in item.split(",") if x)
    windows = args.windows
    if args.all:
        blocks |= {"text", "sa", "isa", "lcp"}
    index = RIndex.build(raw, windows=windows, blocks=blocks, alpha=args.alpha)
    size = index.save(args.output)
    print(f"n={index.n} r={index.r} sigma={index.sigma} "
          f"bits/symbol={size * 8 / index.n:.4f} bytes={size}")


def cmd_count(args) -> None:
    index = RIndex.load(args.index)
    for rng in _map(index.count, _patterns(args)):
        print(rng.occ if rng else 0)


def cmd_locate(args) -> None:
    index = RIndex.load(args.index)
    # the phi chain yields descending SA order; users get ascending positions
    for occ in _map(index.locate, _patterns(args)):
        _print_values(sorted(occ))


def cmd_extract(args) -> None:
    index = RIndex.load(args.index)
    sys.stdout.buffer.write(index.extract(args.i, args.len) + b"\n")


def cmd_sa(args) -> None:
    _print_values(RIndex.load(args.index).sa_range(args.p, args.len))


def cmd_isa(args) -> None:
    _print_values(RIndex.load(args.index).isa_range(args.i, args.len))


def cmd_lcp(args) -> None:
    _print_values(RIndex.load(args.index).lcp_range(args.p, args.len))


def cmd_gen(args) -> None:
    spec = CorpusSpec(args.kind, args.seed_len, args.copies, args.mutation_rate,
                      args.alphabet.encode(), args.rng_seed, args.source)
    data = generate(spec)
    Path(args.output).write_bytes(data)
    print(f"wrote {len(data)} bytes to {args.output}")


def cmd_stats(args) -> None:
    rep = size_report(Path(args.index).read_bytes())
    print(f"n={rep['n']} r={rep['r']} sigma={rep['sigma']} n/r={rep['n'] / rep['r']:.2f}")
    print(f"file_bits={rep['file_bits']} header_bits={rep['overhead_bits']} "
          f"total_bits={rep['total_bits']} bits/symbol={rep['bits_per_symbol']:.4f}")
    for tag, bits in rep["sections"]:
        print(f"section {tag} bits={bits} bits/symbol={bits / rep['n']:.4f}")
    baseline = sum(b for t, b in rep["sections"] if t in ("ALPH", "RLBW", "LOCT"))
    formula = rep["formula_bits"]
    ratio = baseline / formula if formula else float("nan")
    print(f"formula (1.5)r(log(n/r)+2)+2r log n+r log sigma = {formula:.1f} bits; "
          f"baseline/formula = {ratio:.3f}")


def cmd_bench(args) -> None:
    index = RIndex.load(args.index)
    args.pattern = None
    patterns = _patterns(args)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["pattern", "occ", "total_ns", "ns_per_occ"])
    if args.reps <= 0:
        return
    for pat in patterns:
        occ = 0
        start = time.perf_counter_ns()
        for _ in range(args.reps):
            occ = len(index.locate(pat))
        total = (time.perf_counter_ns() - start) // args.reps
        label = pat.hex() if args.hex else pat.decode("latin-1")
        writer.writerow([label, occ, total, f"{total / occ:.1f}" if occ else ""])


def cmd_selftest(args) -> int:
    from .selftest import run_all

    results = run_all(quick=args.quick)
    for res in results:
        print(res.line())
    return 0 if all(r.passed for r in results) else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rindex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an index file from a text file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--windows", type=int, metavar="S", help="window tables of width S")
    p.add_argument("--blocks", action="append", metavar="LIST",
                   help="comma list of text,sa,isa,lcp block structures")
    p.add_argument("--all", action="store_true", help="every optional section")
    p.add_argument("--alpha", type=int, help="leaf width of the block structures")
    p.set_defaults(func=cmd_build)

    for name, func in (("count", cmd_count), ("locate", cmd_locate)):
        p = sub.add_parser(name, help=f"{name} pattern occurrences")
        p.add_argument("index")
        p.add_argument("pattern", nargs="?")
        p.add_argument("--patterns", metavar="FILE", help="newline-delimited patterns")
        p.add_argument("--hex", action="store_true", help="patterns are hex-encoded")
        p.set_defaults(func=func)

    p = sub.add_parser("extract", help="print T[i..i+len-1]")
    p.add_argument("index")
    p.add_argument("i", type=int)
    p.add_argument("len", type=int)
    p.set_defaults(func=cmd_extract)
    for name, func, arg in (("sa", cmd_sa, "p"), ("isa", cmd_isa, "i"), ("lcp", cmd_lcp, "p")):
        p = sub.add_parser(name, help=f"print {name.upper()} values")
        p.add_argument("index")
        p.add_argument(arg, type=int)
        p.add_argument("len", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("gen", help="generate a synthetic corpus")
    p.add_argument("output")
    p.add_argument("--kind", choices=KINDS, default="mutated-copies")
    p.add_argument("--seed-len", type=int, default=1000)
    p.add_argument("--copies", type=int, default=1)
    p.add_argument("--mutation-rate", type=float, default=0.0)
    p.add_argument("--alphabet", default="ACGT")
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--source", help="seed file for --kind file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="size report of an index file")
    p.add_argument("index")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bench", help="time locate queries, CSV to stdout")
    p.add_argument("index")
    p.add_argument("patterns")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--hex", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="run the oracle acceptance suite")
    p.add_argument("--quick", action="store_true", help="reduced scale")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except (RIndexError, OSError) as exc:
        print(f"rindex: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
