"""Command-line front end.

Exit codes: 0 success (or smooth), 1 singular / contract violation,
2 parse error, 3 field or parameter error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from . import __version__
from .blocks import ParameterSet, block_partition
from .characters import (
    NotPolynomial,
    character_table,
    divisibility_check,
    fake_polynomial,
    group_order,
    poincare_candidate,
)
from .combinatorics import enumerate_multipartitions
from .errors import (
    BadCharacteristic,
    BadParameters,
    BudgetExceeded,
    CtxMismatch,
    NonPrime,
    OrderNotDividing,
    ParseError,
    ReducibleModulus,
)
from .gf import FieldCtx, ctx_create, min_extension_degree
from .smoothness import g4_generic_check, g4_table_separates, singular_locus_report

SCHEMA_VERSION = 1
CTX_ERRORS = (NonPrime, ReducibleModulus, OrderNotDividing, CtxMismatch, BadParameters, BadCharacteristic)


@dataclass
class RunConfig:
    command: str
    p: int = 3
    r: int | None = None
    modulus: str | None = None
    m: int = 1
    n: int = 1
    kappa: str = "0"
    c: list[str] = field(default_factory=list)
    fmt: str = "json"
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def ctx(self, order: int | None = None) -> FieldCtx:
        r = self.r
        if r is None:
            r = min_extension_degree(self.p, order or self.m)
            # a parameter written in t needs a proper extension
            texts = [self.kappa, *self.c, *(v for k, v in self.extra.items() if k in ("c1", "c2") and v)]
            if r == 1 and any("t" in s for s in texts):
                r = 2
        return ctx_create(self.p, r, self.modulus)

    def params(self) -> ParameterSet:
        ctx = self.ctx()
        return ParameterSet(self.m, self.n, ctx.parse(self.kappa), tuple(ctx.parse(s) for s in self.c))


def _emit(payload: dict, fmt: str, rows_key: str | None = None):
    payload = {"schema": SCHEMA_VERSION, **payload}
    if fmt == "tsv" and rows_key:
        rows = payload[rows_key]
        if rows:
            keys = list(rows[0])
            print("\t".join(keys))
            for row in rows:
                print("\t".join(json.dumps(row[k]) if not isinstance(row[k], str) else row[k] for k in keys))
        return
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_blocks(cfg: RunConfig) -> int:
    bp = block_partition(cfg.params())
    data = bp.to_json()
    rows = [{"class": i, "members": " ".join(cl["members"])} for i, cl in enumerate(data["classes"])]
    _emit({**data, "rows": rows, "singletons": bp.is_singletons}, cfg.fmt, "rows")
    return 0


def cmd_smooth(cfg: RunConfig) -> int:
    ps = cfg.params()
    rep = singular_locus_report(ps)
    _emit({"params": ps.describe(), "ctx": ps.ctx.describe(), **rep.to_json()}, cfg.fmt)
    return 0 if rep.smooth else 1


def cmd_g4(cfg: RunConfig) -> int:
    ctx = cfg.ctx(order=3)
    c1, c2 = ctx.parse(cfg.extra["c1"]), ctx.parse(cfg.extra["c2"])
    verdict = g4_generic_check(ctx, c1, c2)
    _emit({"ctx": ctx.describe(), "c1": str(c1), "c2": str(c2), "table_separates": g4_table_separates(ctx), **verdict.to_json()}, cfg.fmt)
    return 0


def cmd_g4_sample(cfg: RunConfig) -> int:
    """Fraction of seeded random (c1, c2) with a singleton-block verdict."""
    ctx = cfg.ctx(order=3)
    rng = random.Random(cfg.seed)
    draws = cfg.extra["samples"]
    good = 0
    for _ in range(draws):
        c1, c2 = ctx.from_code(rng.randrange(ctx.q)), ctx.from_code(rng.randrange(ctx.q))
        good += g4_generic_check(ctx, c1, c2).verdict == "singleton-blocks"
    _emit({"ctx": ctx.describe(), "seed": cfg.seed, "samples": draws, "singleton": good, "fraction": good / draws}, cfg.fmt)
    return 0


def cmd_fake(cfg: RunConfig) -> int:
    tab = character_table(cfg.m, cfg.n)
    rows = [
        {"label": str(lam), "dim": tab.dim(lam), "fake": fake_polynomial(lam, cfg.m, cfg.n).to_list()}
        for lam in tab.labels
    ]
    _emit({"m": cfg.m, "n": cfg.n, "rows": rows}, cfg.fmt, "rows")
    return 0


def cmd_classify(cfg: RunConfig) -> int:
    rows = []
    ok = True
    for p in cfg.extra["primes"]:
        for m in range(1, cfg.extra["m_max"] + 1):
            for n in range(1, cfg.extra["n_max"] + 1):
                if m % p == 0 or n >= p or (m, n) == (1, 1):
                    continue
                target = p**n * group_order(m, n)
                for lam in enumerate_multipartitions(m, n):
                    cand = poincare_candidate(lam, m, n, p)
                    div = divisibility_check(lam, m, n, p)
                    poly = cand is not NotPolynomial and cand.is_polynomial()
                    at_one = cand(1) if poly else None
                    good = div and poly and at_one == target
                    ok &= good
                    rows.append({"p": p, "m": m, "n": n, "label": str(lam), "divisible": div, "polynomial": poly, "value_at_1": at_one, "ok": good})
    _emit({"all_divisible": ok, "rows": rows}, cfg.fmt, "rows")
    return 0 if ok else 1


def cmd_oracle(cfg: RunConfig) -> int:
    from .oracle import build_restricted_rank1, build_restricted_s2, oracle_report

    which = cfg.extra["which"]
    if which == "rank1":
        alg = build_restricted_rank1(cfg.m, cfg.params())
    else:
        alg = build_restricted_s2(cfg.params())
    report = oracle_report(alg, identities=not cfg.extra.get("skip_identities", False))
    _emit(report, cfg.fmt)
    return 0 if report["blocks"] == len(report["predicted_classes"]) else 1


def _field_args(p: argparse.ArgumentParser):
    p.add_argument("-p", "--p", type=int, required=True, help="characteristic")
    p.add_argument("-r", "--r", type=int, default=None, help="extension degree (default: smallest containing the m-th roots of unity)")
    p.add_argument("--modulus", default=None, help="defining polynomial, e.g. 't^2+1'")
    p.add_argument("--format", dest="fmt", choices=["json", "tsv"], default="json")
    p.add_argument("--seed", type=int, default=0)


def _param_args(p: argparse.ArgumentParser, m_default: int = 1, n_default: int = 1):
    p.add_argument("-m", "--m", type=int, default=m_default)
    p.add_argument("-n", "--n", type=int, default=n_default)
    p.add_argument("--kappa", default="0")
    p.add_argument("--c", nargs="*", default=None, help="c_1 ... c_(m-1)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cherednik", description="Blocks and smoothness for restricted rational Cherednik algebras of G(m,1,n).")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    for name, hlp in (("blocks", "block partition of the multipartitions"), ("smooth", "hyperplane test; exit 0 smooth, 1 singular")):
        sp = sub.add_parser(name, help=hlp)
        _field_args(sp)
        _param_args(sp)

    sp = sub.add_parser("g4", help="pair-separation verdict for the exceptional group G_4")
    _field_args(sp)
    sp.add_argument("--c1", default=None)
    sp.add_argument("--c2", default=None)
    sp.add_argument("--samples", type=int, default=None, help="instead of one point, draw this many seeded random points")

    sp = sub.add_parser("fake", help="fake polynomials of all irreducibles")
    sp.add_argument("-m", "--m", type=int, required=True)
    sp.add_argument("-n", "--n", type=int, required=True)
    sp.add_argument("--format", dest="fmt", choices=["json", "tsv"], default="json")

    sp = sub.add_parser("classify", help="divisibility and Poincaré-polynomial sweep")
    sp.add_argument("--m-max", type=int, default=3)
    sp.add_argument("--n-max", type=int, default=3)
    sp.add_argument("-p", "--p", type=int, nargs="+", default=[5, 7])
    sp.add_argument("--format", dest="fmt", choices=["json", "tsv"], default="json")

    sp = sub.add_parser("oracle", help="brute-force restricted algebra for C_m or S_2")
    osub = sp.add_subparsers(dest="which", required=True)
    o1 = osub.add_parser("rank1")
    _field_args(o1)
    o1.add_argument("-m", "--m", type=int, default=2)
    o1.add_argument("--c1", default=None, help="shorthand for a single c value")
    o1.add_argument("--c", nargs="*", default=None)
    o1.add_argument("--skip-identities", action="store_true")
    o2 = osub.add_parser("s2")
    _field_args(o2)
    o2.add_argument("--kappa", default="0")
    o2.add_argument("--skip-identities", action="store_true")
    return ap


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cmd = ns.command
    cfg = RunConfig(command=cmd, fmt=getattr(ns, "fmt", "json"), seed=getattr(ns, "seed", 0))
    for key in ("p", "r", "modulus", "m", "n", "kappa"):
        if hasattr(ns, key) and getattr(ns, key) is not None:
            setattr(cfg, key, getattr(ns, key))
    if cmd in ("blocks", "smooth"):
        cfg.c = list(ns.c) if ns.c is not None else ["0"] * (cfg.m - 1)
    elif cmd == "g4":
        cfg.extra = {"c1": ns.c1, "c2": ns.c2, "samples": ns.samples}
        if ns.samples is None and (ns.c1 is None or ns.c2 is None):
            raise ParseError("g4 needs --c1 and --c2, or --samples")
    elif cmd == "classify":
        cfg.extra = {"primes": ns.p, "m_max": ns.m_max, "n_max": ns.n_max}
    elif cmd == "oracle":
        cfg.extra = {"which": ns.which, "skip_identities": ns.skip_identities}
        if ns.which == "rank1":
            cfg.n = 1
            if ns.c is not None:
                cfg.c = list(ns.c)
            elif ns.c1 is not None:
                cfg.c = [ns.c1]
            else:
                cfg.c = ["0"] * (cfg.m - 1)
        else:
            cfg.m, cfg.n = 1, 2
    return cfg


COMMANDS = {
    "blocks": cmd_blocks,
    "smooth": cmd_smooth,
    "fake": cmd_fake,
    "classify": cmd_classify,
    "oracle": cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        if cfg.command == "g4":
            return cmd_g4_sample(cfg) if cfg.extra["samples"] is not None else cmd_g4(cfg)
        return COMMANDS[cfg.command](cfg)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except CTX_ERRORS as e:
        print(f"field/parameter error: {e}", file=sys.stderr)
        return 3
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
