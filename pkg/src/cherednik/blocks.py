"""Parameters of G(m,1,n) and the block partition from shifted residues."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from . import fqlinalg as fl
from .combinatorics import Multipartition, ResidueMultiset, enumerate_multipartitions, shifted_residue
from .errors import BadParameters, CtxMismatch, SizeMismatch
from .gf import FieldCtx, FieldElement, primitive_root_of_unity


@dataclass(frozen=True)
class ParameterSet:
    """``kappa`` and ``c = (c_1, ..., c_{m-1})`` for G(m,1,n) over ``ctx``."""

    m: int
    n: int
    kappa: FieldElement
    c: tuple[FieldElement, ...] = ()
    check_order: bool = field(default=True, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))
        ctx = self.ctx
        if self.m < 1 or self.n < 0:
            raise BadParameters(f"need m >= 1, n >= 0; got m={self.m}, n={self.n}")
        if len(self.c) != self.m - 1:
            raise BadParameters(f"expected {self.m - 1} values c_1..c_(m-1), got {len(self.c)}")
        if any(x.ctx != ctx for x in self.c):
            raise CtxMismatch("parameters from different fields")
        if self.check_order:
            if self.m % ctx.p == 0 or ctx.p <= self.n:
                raise BadParameters(f"p={ctx.p} divides |G({self.m},1,{self.n})| = {self.order}")
            primitive_root_of_unity(ctx, self.m)

    @property
    def ctx(self) -> FieldCtx:
        return self.kappa.ctx

    @property
    def order(self) -> int:
        return self.m**self.n * factorial(self.n)

    def with_n(self, n: int) -> "ParameterSet":
        return ParameterSet(self.m, n, self.kappa, self.c, self.check_order)

    def describe(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "kappa": str(self.kappa),
            "c": [str(x) for x in self.c],
            **self.ctx.describe(),
        }


@dataclass(frozen=True)
class DerivedParams:
    H: tuple[FieldElement, ...]
    a: tuple[FieldElement, ...]


def derive_params(ps: ParameterSet) -> DerivedParams:
    """Solve for ``H`` with the extra row ``sum(H) = 0``; ``a`` is the partial-sum vector."""
    ctx, m = ps.ctx, ps.m
    if m == 1:
        return DerivedParams((ctx.zero,), (ctx.zero,))
    eta_inv = primitive_root_of_unity(ctx, m) ** -1
    A = np.array([[(eta_inv ** (l * j)).code for j in range(m)] for l in range(m)], dtype=np.int64)
    rhs = [ctx.zero] + [-(ps.c[l - 1] * (1 - eta_inv**l)) for l in range(1, m)]
    b = np.array([x.code for x in rhs], dtype=np.int64)
    H_codes = fl.matvec(ctx, fl.inverse(ctx, A), b)
    H = tuple(ctx.from_code(int(x)) for x in H_codes)
    a = [ctx.zero]
    for j in range(1, m):
        a.append(a[-1] + H[j])
    return DerivedParams(H, tuple(a))


@dataclass(frozen=True)
class BlockClass:
    members: tuple[Multipartition, ...]
    residue: ResidueMultiset


@dataclass(frozen=True)
class BlockPartition:
    params: ParameterSet
    classes: tuple[BlockClass, ...]

    @property
    def is_singletons(self) -> bool:
        return all(len(c.members) == 1 for c in self.classes)

    def class_of(self, lam: Multipartition) -> int:
        for i, cl in enumerate(self.classes):
            if lam in cl.members:
                return i
        raise KeyError(lam)

    def to_json(self) -> dict:
        ps = self.params
        return {
            "m": ps.m,
            "n": ps.n,
            "p": ps.ctx.p,
            "ctx": ps.ctx.describe(),
            "kappa": str(ps.kappa),
            "c": [str(x) for x in ps.c],
            "classes": [
                {"members": [str(x) for x in cl.members], "residue": cl.residue.to_json()} for cl in self.classes
            ],
        }


def residue_of(lam: Multipartition, ps: ParameterSet, derived: DerivedParams | None = None) -> ResidueMultiset:
    derived = derived or derive_params(ps)
    return shifted_residue(lam, derived.a, ps.kappa)


def block_partition(ps: ParameterSet) -> BlockPartition:
    derived = derive_params(ps)
    groups: dict[ResidueMultiset, list[Multipartition]] = {}
    for lam in enumerate_multipartitions(ps.m, ps.n):
        groups.setdefault(residue_of(lam, ps, derived), []).append(lam)
    order = {lam: i for i, lam in enumerate(enumerate_multipartitions(ps.m, ps.n))}
    classes = [BlockClass(tuple(mem), res) for res, mem in groups.items()]
    classes.sort(key=lambda cl: min(order[x] for x in cl.members))
    return BlockPartition(ps, tuple(classes))


def same_block(lam: Multipartition, mu: Multipartition, ps: ParameterSet) -> bool:
    if lam.size != ps.n or mu.size != ps.n or lam.m != ps.m or mu.m != ps.m:
        raise SizeMismatch(f"labels must be {ps.m}-multipartitions of {ps.n}")
    derived = derive_params(ps)
    return residue_of(lam, ps, derived) == residue_of(mu, ps, derived)
