"""Partitions, multipartitions, contents and shifted residues.

A partition is a weakly decreasing tuple of positive ints.  Multipartitions
print as ``[2,1|1|]`` (three components: (2,1), (1) and the empty partition).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CtxMismatch, ParseError
from .gf import FieldElement, artin_schreier

Partition = tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def compositions(n: int, m: int) -> list[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``m`` parts, reverse-lex order."""
    if m == 1:
        return [(n,)]
    return [(k,) + rest for k in range(n, -1, -1) for rest in compositions(n - k, m - 1)]


def transpose(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def contents(lam: Sequence[int]) -> list[int]:
    """Contents (column minus row) of every box, row by row."""
    return [col - row for row, part in enumerate(lam) for col in range(part)]


def hook_lengths(lam: Sequence[int]) -> list[int]:
    lt = transpose(lam)
    return [(part - col - 1) + (lt[col] - row - 1) + 1 for row, part in enumerate(lam) for col in range(part)]


def dim_sn(lam: Sequence[int]) -> int:
    """Dimension of the Specht module, by the hook length formula."""
    n = sum(lam)
    num = 1
    for k in range(2, n + 1):
        num *= k
    den = 1
    for h in hook_lengths(lam):
        den *= h
    return num // den


def _check_partition(lam: Sequence[int]) -> Partition:
    lam = tuple(int(x) for x in lam)
    if any(x <= 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {lam}")
    return lam


@dataclass(frozen=True, order=True)
class Multipartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(_check_partition(c) for c in self.components))

    @classmethod
    def of(cls, *components: Iterable[int]) -> "Multipartition":
        return cls(tuple(tuple(c) for c in components))

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in self.components)

    def __str__(self):
        return "[" + "|".join(",".join(map(str, c)) for c in self.components) + "]"

    def __repr__(self):
        return f"Multipartition({self})"

    def transpose(self) -> "Multipartition":
        return Multipartition(tuple(transpose(c) for c in self.components))


def parse_multipartition(text: str) -> Multipartition:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"multipartition must look like [2,1|1|], got {text!r}")
    comps = []
    for chunk in s[1:-1].split("|"):
        chunk = chunk.strip()
        try:
            parts = tuple(int(x) for x in chunk.split(",")) if chunk else ()
        except ValueError as exc:
            raise ParseError(f"bad component {chunk!r} in {text!r}") from exc
        comps.append(parts)
    try:
        return Multipartition(tuple(comps))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


@lru_cache(maxsize=None)
def enumerate_multipartitions(m: int, n: int) -> tuple[Multipartition, ...]:
    """P(m, n): size vectors in reverse-lex order, then each component reverse-lex."""
    if m < 1 or n < 0:
        raise ValueError(f"need m >= 1 and n >= 0, got m={m}, n={n}")
    out = []
    for sizes in compositions(n, m):
        out.extend(_products([partitions(k) for k in sizes]))
    return tuple(out)


def _products(choices):
    if not choices:
        yield Multipartition(())
        return
    for first in choices[0]:
        for rest in _products(choices[1:]):
            yield Multipartition((first,) + rest.components)


class ResidueMultiset:
    """Finite multiset of field elements (the additive shadow of a group-ring element)."""

    __slots__ = ("_counts",)

    def __init__(self, items: Iterable[FieldElement] | dict = ()):
        if isinstance(items, dict):
            counts = Counter({k: v for k, v in items.items() if v})
        else:
            counts = Counter(items)
        ctxs = {e.ctx for e in counts}
        if len(ctxs) > 1:
            raise CtxMismatch("residue entries from different fields")
        self._counts = counts

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def items(self) -> list[tuple[FieldElement, int]]:
        return sorted(self._counts.items(), key=lambda kv: kv[0].code)

    def key(self) -> tuple:
        return tuple((e.code, k) for e, k in self.items())

    def __eq__(self, other):
        return isinstance(other, ResidueMultiset) and self._counts == other._counts

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other: "ResidueMultiset") -> "ResidueMultiset":
        return ResidueMultiset(dict(self._counts + other._counts))

    def power_sum(self, r: int, ctx=None) -> FieldElement:
        """Sum of ``e**r`` over entries counted with multiplicity."""
        items = self.items()
        if not items:
            if ctx is None:
                raise ValueError("empty multiset needs an explicit ctx")
            return ctx.zero
        acc = items[0][0].ctx.zero
        for e, k in items:
            acc = acc + (e**r) * k
        return acc

    def to_json(self) -> list[dict]:
        return [{"elt": str(e), "mult": k} for e, k in self.items()]

    def __repr__(self):
        return "{" + ", ".join(f"{e}: {k}" for e, k in self.items()) + "}"


def shifted_residue(lam: Multipartition, a: Sequence[FieldElement], kappa: FieldElement) -> ResidueMultiset:
    """Multiset of ``AS(a_i) - cont(b) AS(kappa)`` over boxes ``b`` of component ``i``."""
    if len(a) != lam.m:
        raise ValueError(f"need {lam.m} shifts, got {len(a)}")
    for x in a:
        if x.ctx != kappa.ctx:
            raise CtxMismatch("shift vector and kappa live in different fields")
    s = artin_schreier(kappa)
    out = []
    for ai, comp in zip(a, lam.components):
        base = artin_schreier(ai)
        out.extend(base - s * c for c in contents(comp))
    return ResidueMultiset(out)
