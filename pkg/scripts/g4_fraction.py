"""Fraction of (c1, c2) in F_{p^r}^2 whose G_4 verdict is singleton-blocks.

Exhaustive when q^2 is at most --exhaustive-limit, otherwise seeded sampling.
"""

import argparse
import json
import random
from collections import Counter

from cherednik.gf import ctx_create
from cherednik.smoothness import g4_generic_check


def fraction(p, r, samples, seed, limit):
    ctx = ctx_create(p, r)
    els = ctx.elements()
    if ctx.q**2 <= limit:
        points = ((a, b) for a in els for b in els)
        total = ctx.q**2
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        points = ((rng.choice(els), rng.choice(els)) for _ in range(samples))
        total = samples
        mode = f"sampled(seed={seed})"
    good = 0
    blockers = Counter()
    for c1, c2 in points:
        v = g4_generic_check(ctx, c1, c2)
        good += v.verdict == "singleton-blocks"
        blockers[len(v.unseparated_pairs)] += 1
    return {"p": p, "r": r, "mode": mode, "points": total, "singleton": good, "fraction": round(good / total, 4),
            "unseparated_pair_counts": dict(sorted(blockers.items()))}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-p", type=int, default=7)
    ap.add_argument("-r", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--samples", type=int, default=5000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--exhaustive-limit", type=int, default=200_000)
    args = ap.parse_args()
    for r in args.r:
        print(json.dumps(fraction(args.p, r, args.samples, args.seed, args.exhaustive_limit)))


if __name__ == "__main__":
    main()
