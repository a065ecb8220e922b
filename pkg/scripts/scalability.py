"""Bits per symbol of growing prefixes of one collection, per section.

    python scripts/scalability.py --copies 200 --steps 5 --all
"""

import argparse

from rindex.corpus import CorpusSpec, generate
from rindex.index import RIndex, size_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed-len", type=int, default=1000)
    ap.add_argument("--copies", type=int, default=100)
    ap.add_argument("--mutation-rate", type=float, default=1e-3)
    ap.add_argument("--steps", type=int, default=5)
    ap.add_argument("--all", action="store_true", help="include every optional section")
    ap.add_argument("--rng-seed", type=int, default=7)
    args = ap.parse_args()

    raw = generate(CorpusSpec("mutated-copies", args.seed_len, args.copies,
                              args.mutation_rate, b"ACGT", args.rng_seed))
    blocks = ("text", "sa", "isa", "lcp") if args.all else ()
    header = None
    for step in range(1, args.steps + 1):
        prefix = raw[: len(raw) * step // args.steps]
        rep = size_report(RIndex.build(prefix, blocks=blocks).to_bytes())
        per = {tag: bits / rep["n"] for tag, bits in rep["sections"]}
        if header is None:
            header = list(per)
            print("n,r," + ",".join(header) + ",total")
        cols = ",".join(f"{per.get(tag, 0):.4f}" for tag in header)
        print(f"{rep['n']},{rep['r']},{cols},{rep['bits_per_symbol']:.4f}")


if __name__ == "__main__":
    main()
