"""Hyperplane arrangement, parabolic types, and the G_4 Euler-element check."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .blocks import ParameterSet, block_partition, derive_params
from .combinatorics import partitions
from .errors import BadCharacteristic, CtxMismatch
from .gf import FieldCtx, FieldElement, artin_schreier, in_prime_subfield, primitive_root_of_unity


@dataclass(frozen=True)
class Violation:
    i: int
    j: int
    C: int
    sign: str

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "C": self.C, "sign": self.sign}


@dataclass(frozen=True)
class HyperplaneReport:
    kappa_in_Fp: bool
    violations: tuple[Violation, ...]

    @property
    def smooth(self) -> bool:
        return not self.kappa_in_Fp and not self.violations

    @property
    def verdict(self) -> str:
        return "smooth" if self.smooth else "singular"

    def to_json(self) -> dict:
        return {
            "kappa_in_Fp": self.kappa_in_Fp,
            "violations": [v.to_json() for v in self.violations],
            "verdict": self.verdict,
        }


def singular_locus_report(ps: ParameterSet) -> HyperplaneReport:
    """Test ``kappa in F_p`` (rank >= 2 only) and every ``a_i - a_j +- C kappa in F_p``."""
    a = derive_params(ps).a
    # kappa never enters the relations when n = 1
    kappa_flag = ps.n >= 2 and in_prime_subfield(ps.kappa)
    bad = []
    for i in range(ps.m):
        for j in range(ps.m):
            if i == j:
                continue
            for C in range(ps.n):
                for sign, s in (("+", 1), ("-", -1)):
                    if in_prime_subfield(a[i] - a[j] + ps.kappa * (s * C)):
                        bad.append(Violation(i, j, C, sign))
    return HyperplaneReport(kappa_flag, tuple(bad))


@dataclass(frozen=True)
class ParabolicType:
    sym_factors: tuple[int, ...]
    wreath_rank: int

    def __str__(self):
        parts = [f"S_{k}" for k in self.sym_factors]
        if self.wreath_rank:
            parts.append(f"G(m,1,{self.wreath_rank})")
        return " x ".join(parts) or "1"


def parabolic_types(m: int, n: int) -> list[ParabolicType]:
    """Conjugacy types of parabolic subgroups of G(m,1,n)."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    out = []
    if m == 1:
        for total in range(n + 1):
            for lam in partitions(total):
                if all(k >= 2 for k in lam):
                    out.append(ParabolicType(lam, 0))
        return out
    for rank in range(n + 1):
        for total in range(n - rank + 1):
            for lam in partitions(total):
                if all(k >= 2 for k in lam):
                    out.append(ParabolicType(lam, rank))
    return out


def _singletons(ps: ParameterSet) -> bool:
    if ps.n == 0 or (ps.m == 1 and ps.n == 1):
        return True
    return block_partition(ps).is_singletons


def parabolic_singletons(ps: ParameterSet, ptype: ParabolicType) -> bool:
    for k in ptype.sym_factors:
        if not _singletons(ParameterSet(1, k, ps.kappa)):
            return False
    if ptype.wreath_rank and not _singletons(ps.with_n(ptype.wreath_rank)):
        return False
    return True


def all_parabolics_singleton(ps: ParameterSet) -> bool:
    return all(parabolic_singletons(ps, pt) for pt in parabolic_types(ps.m, ps.n))


def smooth_iff_singleton_blocks(ps: ParameterSet) -> tuple[bool, bool]:
    """(hyperplane verdict is smooth, every parabolic has singleton blocks)."""
    return singular_locus_report(ps).smooth, all_parabolics_singleton(ps)


def top_group_singleton(ps: ParameterSet) -> bool:
    return _singletons(ps)


# --- G_4 -----------------------------------------------------------------------

G4_ROWS = ("T", "V1", "V2", "W", "h", "h*", "U")
Z3_ROWS = ("T", "V1", "V2")


def g4_scalar_table(ctx: FieldCtx) -> dict[str, tuple[FieldElement, FieldElement]]:
    """Scalars of the two class sums ``z_1, z_2`` on each irreducible of G_4."""
    w = primitive_root_of_unity(ctx, 3)
    w2 = w * w
    f = ctx.element
    return {
        "T": (f(4), f(4)),
        "V1": (w2 * 4, w * 4),
        "V2": (w * 4, w2 * 4),
        "W": (f(-2), f(-2)),
        "h": (w2 * -2, w * -2),
        "h*": (w * -2, w2 * -2),
        "U": (f(0), f(0)),
    }


@dataclass(frozen=True)
class G4Verdict:
    separated_pairs: tuple[tuple[str, str], ...]
    unseparated_pairs: tuple[tuple[str, str], ...]
    z3_unseparated_pairs: tuple[tuple[str, str], ...]

    @property
    def verdict(self) -> str:
        if self.unseparated_pairs or self.z3_unseparated_pairs:
            return "inconclusive"
        return "singleton-blocks"

    def to_json(self) -> dict:
        return {
            "separated_pairs": [list(x) for x in self.separated_pairs],
            "unseparated_pairs": [list(x) for x in self.unseparated_pairs],
            "z3_unseparated_pairs": [list(x) for x in self.z3_unseparated_pairs],
            "verdict": self.verdict,
        }


def g4_d(ctx: FieldCtx, c1: FieldElement, c2: FieldElement) -> tuple[FieldElement, FieldElement]:
    w = primitive_root_of_unity(ctx, 3)
    return -c1 / (1 - w * w), -c2 / (1 - w)


def g4_generic_check(ctx: FieldCtx, c1: FieldElement, c2: FieldElement) -> G4Verdict:
    if ctx.p in (2, 3):
        raise BadCharacteristic("G_4 needs p >= 5")
    if c1.ctx != ctx or c2.ctx != ctx:
        raise CtxMismatch("c_1, c_2 must live in ctx")
    d1, d2 = g4_d(ctx, c1, c2)
    table = g4_scalar_table(ctx)

    def same(mu, rho):
        return in_prime_subfield(d1 * (table[mu][0] - table[rho][0]) + d2 * (table[mu][1] - table[rho][1]))

    sep, unsep = [], []
    for mu, rho in combinations(G4_ROWS, 2):
        (unsep if same(mu, rho) else sep).append((mu, rho))
    z3 = [(mu, rho) for mu, rho in combinations(Z3_ROWS, 2) if same(mu, rho)]
    return G4Verdict(tuple(sep), tuple(unsep), tuple(z3))


def g4_table_separates(ctx: FieldCtx) -> bool:
    """No two distinct rows of the scalar table agree in both coordinates."""
    rows = list(g4_scalar_table(ctx).values())
    return len(set((a.code, b.code) for a, b in rows)) == len(rows)


def euler_scalar_shift(d: Sequence[FieldElement], mu: Sequence[FieldElement]) -> FieldElement:
    """Scalar of ``h^p - h`` on L(mu): the sum of ``AS(d_i mu_i)``."""
    if len(d) != len(mu) or not d:
        raise ValueError("d and mu must be nonempty of equal length")
    ctx = d[0].ctx
    if any(x.ctx != ctx for x in list(d) + list(mu)):
        raise CtxMismatch("mixed fields")
    acc = ctx.zero
    for di, mi in zip(d, mu):
        acc = acc + artin_schreier(di * mi)
    return acc
