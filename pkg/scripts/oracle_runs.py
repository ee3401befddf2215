"""Brute-force oracle runs: blocks, heads and power-sum eigenvalues vs the residue formula."""

import argparse
import json
import time

from cherednik.blocks import ParameterSet
from cherednik.gf import ctx_create
from cherednik.oracle import build_restricted_rank1, build_restricted_s2, oracle_report

CASES = [
    ("rank1", 2, 3, 2, ["t"]),
    ("rank1", 2, 3, 2, ["1"]),
    ("rank1", 2, 3, 2, ["0"]),
    ("rank1", 3, 5, 2, ["t", "2"]),
    ("rank1", 4, 3, 2, ["t", "1", "t+1"]),
    ("s2", 1, 3, 2, ["t"]),
    ("s2", 1, 3, 2, ["1"]),
]


def run(kind, m, p, r, params, identities):
    F = ctx_create(p, r)
    t0 = time.perf_counter()
    if kind == "rank1":
        alg = build_restricted_rank1(m, ParameterSet(m, 1, F.zero, tuple(F.parse(c) for c in params)))
    else:
        alg = build_restricted_s2(ParameterSet(1, 2, F.parse(params[0])))
    rep = oracle_report(alg, identities=identities)
    return {
        "case": f"{kind} m={m} p={p} r={r} {params}",
        "dim": rep["dim"],
        "blocks": rep["blocks"],
        "oracle_classes": rep["classes"],
        "predicted_classes": rep["predicted_classes"],
        "heads": rep["simple_head_dims"],
        "power_sums": rep["power_sums"],
        "identities_ok": all(rep.get("identities", {}).values()),
        "seconds": round(time.perf_counter() - t0, 1),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-s2", action="store_true")
    ap.add_argument("--skip-identities", action="store_true")
    args = ap.parse_args()
    for case in CASES:
        if args.skip_s2 and case[0] == "s2":
            continue
        print(json.dumps(run(*case, identities=not args.skip_identities)))


if __name__ == "__main__":
    main()
