"""Run the character/Molien consistency suite over every admissible G(m,1,n)."""

import argparse
import json
import time

from cherednik.characters import admissible_groups, character_suite


def sweep(primes=(5, 7), budget=5000, max_m=24):
    grid: dict[tuple[int, int], list[int]] = {}
    for p in primes:
        for mn in admissible_groups(p, budget, max_m):
            grid.setdefault(mn, []).append(p)
    rows = []
    for (m, n), ps in sorted(grid.items()):
        t0 = time.perf_counter()
        checks = character_suite(m, n, ps)
        rows.append({"m": m, "n": n, "primes": ps, "ok": all(checks.values()), "failed": [k for k, v in checks.items() if not v], "seconds": round(time.perf_counter() - t0, 2)})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=24)
    ap.add_argument("--budget", type=int, default=5000)
    ap.add_argument("-p", type=int, nargs="+", default=[5, 7])
    args = ap.parse_args()
    t0 = time.perf_counter()
    rows = sweep(tuple(args.p), args.budget, args.max_m)
    for row in rows:
        print(json.dumps(row))
    print(json.dumps({"groups": len(rows), "all_ok": all(r["ok"] for r in rows), "seconds": round(time.perf_counter() - t0, 1)}))


if __name__ == "__main__":
    main()
