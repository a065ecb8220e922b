"""Runs, index size and budget ratio as a repetitive DNA-like collection grows.

Desk-scale analog of a collection-size table: one seed, more mutated copies.
    python scripts/compression_trend.py --copies 1 10 100 300
"""

import argparse
import time

from rindex.corpus import CorpusSpec, generate
from rindex.index import RIndex, size_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed-len", type=int, default=1000)
    ap.add_argument("--copies", type=int, nargs="+", default=[1, 10, 100])
    ap.add_argument("--mutation-rate", type=float, default=1e-3)
    ap.add_argument("--rng-seed", type=int, default=2018)
    args = ap.parse_args()

    print(f"{'copies':>7} {'n':>9} {'r':>7} {'n/r':>8} {'bits/sym':>9} {'vs formula':>10} {'build s':>8}")
    for copies in args.copies:
        spec = CorpusSpec("mutated-copies", args.seed_len, copies, args.mutation_rate,
                          b"ACGT", args.rng_seed)
        raw = generate(spec)
        start = time.perf_counter()
        index = RIndex.build(raw)
        elapsed = time.perf_counter() - start
        rep = size_report(index.to_bytes())
        print(f"{copies:>7} {index.n:>9} {index.r:>7} {index.n / index.r:>8.1f} "
              f"{rep['bits_per_symbol']:>9.4f} {rep['file_bits'] / rep['formula_bits']:>10.3f} "
              f"{elapsed:>8.2f}")


if __name__ == "__main__":
    main()
