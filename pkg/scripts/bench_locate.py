"""Time per located occurrence as the collection grows, random text patterns.

The trend (roughly flat ns/occ) is reported, not asserted.
    python scripts/bench_locate.py --copies 10 50 100 --length 8
"""

import argparse
import random
import time

from rindex.corpus import CorpusSpec, generate
from rindex.index import RIndex


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--copies", type=int, nargs="+", default=[10, 50, 100])
    ap.add_argument("--length", type=int, default=8)
    ap.add_argument("--patterns", type=int, default=200)
    ap.add_argument("--rng-seed", type=int, default=3)
    args = ap.parse_args()

    print("copies,n,r,patterns,occ,count_us_per_pattern,locate_ns_per_occ")
    for copies in args.copies:
        raw = generate(CorpusSpec("mutated-copies", 1000, copies, 1e-3, b"ACGT", args.rng_seed))
        index = RIndex.build(raw)
        rng = random.Random(args.rng_seed)
        starts = [rng.randrange(len(raw) - args.length) for _ in range(args.patterns)]
        pats = [raw[i : i + args.length] for i in starts]
        t0 = time.perf_counter_ns()
        for p in pats:
            index.count(p)
        t1 = time.perf_counter_ns()
        occ = sum(len(index.locate(p)) for p in pats)
        t2 = time.perf_counter_ns()
        print(f"{copies},{index.n},{index.r},{len(pats)},{occ},"
              f"{(t1 - t0) / len(pats) / 1000:.1f},{(t2 - t1) / occ:.0f}")


if __name__ == "__main__":
    main()
