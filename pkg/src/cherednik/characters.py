"""Characters of G(m,1,n), fake polynomials and the p-coinvariant data.

Character values live in Q(zeta_m).  Internally they are integer vectors in the
group ring Z[C_m] (entry k is the coefficient of zeta^k); canonical forms from
:mod:`cherednik.cyclotomic` are used whenever values are compared.

Conventions.  A group element ``(perm, colors)`` sends the basis vector ``y_j``
of V to ``zeta^colors[perm[j]] * y_{perm[j]}``.  Component ``i`` of a
multipartition carries the linear character ``zeta^(i * color)`` of C_m.  Fake
polynomials are graded multiplicities in the coinvariants of k[V] = S(V*).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterator, Sequence

import numpy as np

from .combinatorics import Multipartition, enumerate_multipartitions
from .cyclotomic import CyclotomicNumber, conj_vector, reduce_vector
from .errors import BudgetExceeded, InternalError
from .laurent import LaurentPoly

DEFAULT_MAX_ORDER = int(os.environ.get("CHEREDNIK_MAX_GROUP_ORDER", "5000"))

Cycles = tuple[tuple[int, int], ...]  # sorted (length, colour sum) pairs


def group_order(m: int, n: int) -> int:
    return m**n * factorial(n)


def degrees(m: int, n: int) -> list[int]:
    return [m * i for i in range(1, n + 1)]


# --- group elements --------------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    perm: tuple[int, ...]
    colors: tuple[int, ...]
    m: int

    @classmethod
    def identity(cls, m: int, n: int) -> "GroupElement":
        return cls(tuple(range(n)), (0,) * n, m)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # (self * other) y_j = self(zeta^{c2[p2 j]} y_{p2 j})
        n = len(self.perm)
        perm = tuple(self.perm[other.perm[j]] for j in range(n))
        inv1 = [0] * n
        for j, pj in enumerate(self.perm):
            inv1[pj] = j
        colors = tuple((self.colors[i] + other.colors[inv1[i]]) % self.m for i in range(n))
        return GroupElement(perm, colors, self.m)

    def inverse(self) -> "GroupElement":
        n = len(self.perm)
        perm = [0] * n
        for j, pj in enumerate(self.perm):
            perm[pj] = j
        colors = tuple((-self.colors[self.perm[i]]) % self.m for i in range(n))
        return GroupElement(tuple(perm), colors, self.m)

    def cycles(self) -> Cycles:
        """Cycle lengths with the colour sum along each cycle."""
        n = len(self.perm)
        seen = [False] * n
        out = []
        for s in range(n):
            if seen[s]:
                continue
            j, length, col = s, 0, 0
            while not seen[j]:
                seen[j] = True
                col += self.colors[j]
                j = self.perm[j]
                length += 1
            out.append((length, col % self.m))
        return tuple(sorted(out, reverse=True))


def group_elements(m: int, n: int) -> Iterator[GroupElement]:
    for perm in permutations(range(n)):
        for colors in product(range(m), repeat=n):
            yield GroupElement(perm, colors, m)


# --- conjugacy classes -------------------------------------------------------------


@lru_cache(maxsize=None)
def conjugacy_classes(m: int, n: int) -> tuple[Cycles, ...]:
    """Coloured cycle types; class k lists the cycle lengths of colour k."""
    out = []
    for mp in enumerate_multipartitions(m, n):
        cyc = [(l, k) for k, comp in enumerate(mp.components) for l in comp]
        out.append(tuple(sorted(cyc, reverse=True)))
    return tuple(out)


def centralizer_order(cycles: Cycles, m: int) -> int:
    counts: dict[tuple[int, int], int] = {}
    for c in cycles:
        counts[c] = counts.get(c, 0) + 1
    out = 1
    for (l, _k), a in counts.items():
        out *= (m * l) ** a * factorial(a)
    return out


def class_representative(cycles: Cycles, m: int) -> GroupElement:
    n = sum(l for l, _ in cycles)
    perm = list(range(n))
    colors = [0] * n
    start = 0
    for l, k in cycles:
        for j in range(l):
            perm[start + j] = start + (j + 1) % l
        colors[start] = k
        start += l
    return GroupElement(tuple(perm), tuple(colors), m)


# --- Murnaghan--Nakayama -------------------------------------------------------------


def _rim_hooks(lam: tuple[int, ...], l: int):
    """Yield (partition after removing a rim hook of size l, leg length)."""
    L = len(lam)
    beta = [lam[i] + L - 1 - i for i in range(L)]
    bset = set(beta)
    for b in beta:
        c = b - l
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        nb = sorted((bset - {b}) | {c}, reverse=True)
        mu = tuple(x - (L - 1 - i) for i, x in enumerate(nb))
        yield tuple(x for x in mu if x > 0), height


@lru_cache(maxsize=None)
def sn_character(lam: tuple[int, ...], cycle_type: tuple[int, ...]) -> int:
    """chi_lam on a permutation of the given cycle type."""
    if not cycle_type:
        return 1 if not lam else 0
    l, rest = cycle_type[0], cycle_type[1:]
    return sum((-1) ** h * sn_character(mu, rest) for mu, h in _rim_hooks(lam, l))


@lru_cache(maxsize=None)
def _wreath_char(comps: tuple[tuple[int, ...], ...], cycles: Cycles, m: int) -> tuple[tuple[int, int], ...]:
    """Sparse Z[C_m] value: sorted (exponent, coefficient) pairs."""
    if not cycles:
        return ((0, 1),) if all(not c for c in comps) else ()
    (l, k), rest = cycles[0], cycles[1:]
    acc: dict[int, int] = {}
    for i, comp in enumerate(comps):
        if sum(comp) < l:
            continue
        for mu, h in _rim_hooks(comp, l):
            sign = -1 if h % 2 else 1
            for e, c in _wreath_char(comps[:i] + (mu,) + comps[i + 1:], rest, m):
                key = (e + i * k) % m
                acc[key] = acc.get(key, 0) + sign * c
    return tuple(sorted((e, c) for e, c in acc.items() if c))


def character_vector(lam: Multipartition, cycles: Cycles, m: int) -> np.ndarray:
    """chi_lam on the class ``cycles`` as a Z[C_m] vector."""
    v = np.zeros(m, dtype=np.int64)
    for e, c in _wreath_char(lam.components, tuple(sorted(cycles, reverse=True)), m):
        v[e] = c
    return v


def character_value(lam: Multipartition, g: GroupElement) -> CyclotomicNumber:
    return CyclotomicNumber.from_vector(character_vector(lam, g.cycles(), g.m), g.m)


def ring_contract(A: np.ndarray, B: np.ndarray, chunk: int = 1 << 24) -> np.ndarray:
    """``out[a, d] = sum_k A[a, k] * B[k, d]`` with products taken in Z[C_m].

    A has shape (L, K, m) and B shape (K, D, m).  The contraction is one float64
    matrix product per chunk of ``d``; an a-priori bound on the entries keeps it
    exact, otherwise an integer fallback is used.
    """
    L, K, m = A.shape
    D = B.shape[1]
    idx = (np.arange(m)[None, :] - np.arange(m)[:, None]) % m  # [j, s] -> s - j
    bound = int(np.abs(A).sum(axis=(1, 2)).max(initial=0)) * int(np.abs(B).max(initial=0))
    out = np.zeros((L, D, m), dtype=np.int64)
    step = max(1, chunk // max(1, K * m * m))
    for d0 in range(0, D, step):
        Bs = B[:, d0:d0 + step][:, :, idx]  # K x dd x j x s
        dd = Bs.shape[1]
        Bs = Bs.transpose(0, 2, 1, 3).reshape(K * m, dd * m)
        if bound < 2**52:
            blk = np.rint(A.reshape(L, K * m).astype(np.float64) @ Bs.astype(np.float64)).astype(np.int64)
        else:
            blk = A.reshape(L, K * m) @ Bs
        out[:, d0:d0 + dd] = blk.reshape(L, dd, m)
    return out


# --- character table ---------------------------------------------------------------------


@dataclass(frozen=True)
class CharacterTable:
    m: int
    n: int
    labels: tuple[Multipartition, ...]
    classes: tuple[Cycles, ...]
    class_sizes: tuple[int, ...]
    values: np.ndarray  # labels x classes x m, group-ring coordinates

    @property
    def order(self) -> int:
        return group_order(self.m, self.n)

    def index(self, lam: Multipartition) -> int:
        return self.labels.index(lam)

    def value(self, lam: Multipartition, cls: Cycles) -> CyclotomicNumber:
        return CyclotomicNumber.from_vector(self.values[self.index(lam), self.classes.index(cls)], self.m)

    def dim(self, lam: Multipartition) -> int:
        ident = self.classes.index(tuple((1, 0) for _ in range(self.n)))
        v = reduce_vector(self.values[self.index(lam), ident], self.m)
        return int(v[0])

    def reduced(self) -> np.ndarray:
        return reduce_vector(self.values, self.m)

    def gram(self) -> np.ndarray:
        """Reduced coordinates of sum_K |K| chi(K) conj(psi(K)), all label pairs."""
        X = self.values
        Y = conj_vector(X) * np.array(self.class_sizes, dtype=np.int64)[None, :, None]
        G = ring_contract(X, Y.transpose(1, 0, 2))
        return reduce_vector(G, self.m)


def check_budget(m: int, n: int, budget: int | None = None):
    budget = DEFAULT_MAX_ORDER if budget is None else budget
    if group_order(m, n) > budget:
        raise BudgetExceeded(f"|G({m},1,{n})| = {group_order(m, n)} exceeds budget {budget}")


@lru_cache(maxsize=None)
def character_table(m: int, n: int, budget: int | None = None) -> CharacterTable:
    check_budget(m, n, budget)
    labels = enumerate_multipartitions(m, n)
    classes = conjugacy_classes(m, n)
    W = group_order(m, n)
    sizes = tuple(W // centralizer_order(c, m) for c in classes)
    vals = np.array([[character_vector(lam, c, m) for c in classes] for lam in labels], dtype=np.int64)
    return CharacterTable(m, n, labels, classes, sizes, vals)


def induced_character_bruteforce(lam: Multipartition, m: int, n: int) -> dict[Cycles, CyclotomicNumber]:
    """Induce the cohort character from C_m wr (S_{n_0} x ... x S_{n_{m-1}}) by summing over G."""
    sizes = lam.sizes
    block = []
    for i, s in enumerate(sizes):
        block.extend([i] * s)

    def in_H(g: GroupElement) -> bool:
        return all(block[g.perm[j]] == block[j] for j in range(n))

    def chi_dot(g: GroupElement) -> np.ndarray:
        v = np.zeros(m, dtype=np.int64)
        if not in_H(g):
            return v
        coeff, shift = 1, 0
        for i, comp in enumerate(lam.components):
            idx = [j for j in range(n) if block[j] == i]
            shift += i * sum(g.colors[j] for j in idx)
            seen, ctype = set(), []
            for s in idx:
                if s in seen:
                    continue
                j, length = s, 0
                while j not in seen:
                    seen.add(j)
                    j = g.perm[j]
                    length += 1
                ctype.append(length)
            coeff *= sn_character(comp, tuple(sorted(ctype, reverse=True)))
        v[shift % m] = coeff
        return v

    elements = list(group_elements(m, n))
    H_order = m**n
    for s in sizes:
        H_order *= factorial(s)
    out = {}
    for cyc in conjugacy_classes(m, n):
        g = class_representative(cyc, m)
        tot = np.zeros(m, dtype=np.int64)
        for x in elements:
            tot += chi_dot(x * g * x.inverse())
        out[cyc] = CyclotomicNumber.from_vector([Fraction(int(x), H_order) for x in tot], m)
    return out


# --- Molien series and fake polynomials -----------------------------------------------


def _inverse_det_series(cycles: Cycles, m: int, D: int, dual: bool = True) -> np.ndarray:
    """Series of 1/det(1 - t g) on V* (or V), degrees 0..D, group-ring coefficients."""
    S = np.zeros((D + 1, m), dtype=np.int64)
    S[0, 0] = 1
    for l, k in cycles:
        shift = (-k) % m if dual else k % m
        # multiply by 1/(1 - zeta^shift t^l)
        for d in range(l, D + 1):
            S[d] = S[d] + np.roll(S[d - l], shift)
    return S


@lru_cache(maxsize=None)
def _molien_numerators(m: int, n: int, D: int) -> np.ndarray:
    """For every label, sum_K |K| conj(chi(K)) / det(1 - t g_K | V*), degrees 0..D."""
    tab = character_table(m, n)
    S = np.array([_inverse_det_series(c, m, D) for c in tab.classes], dtype=np.int64)  # K x (D+1) x m
    X = conj_vector(tab.values) * np.array(tab.class_sizes, dtype=np.int64)[None, :, None]
    out = ring_contract(X, S)
    return out


def molien_series(lam: Multipartition, m: int, n: int, D: int) -> list:
    """Multiplicities of lam in S^d(V*), d = 0..D (exact rationals)."""
    tab = character_table(m, n)
    num = _molien_numerators(m, n, D)[tab.index(lam)]
    red = reduce_vector(num, m)
    W = tab.order
    out = []
    for d in range(D + 1):
        if any(red[d, 1:]):
            raise InternalError(f"Molien coefficient in degree {d} is irrational")
        out.append(Fraction(int(red[d, 0]), W))
    return out


@lru_cache(maxsize=None)
def _fake_all(m: int, n: int) -> tuple[LaurentPoly, ...]:
    tab = character_table(m, n)
    degs = degrees(m, n)
    D = sum(degs)
    top = sum(d - 1 for d in degs)
    num = _molien_numerators(m, n, D)
    # multiply the series by prod(1 - t^{d_i}) while still in the group ring
    prod_poly = LaurentPoly({0: 1})
    for d in degs:
        prod_poly = prod_poly * LaurentPoly({0: 1, d: -1})
    out = []
    for a in range(len(tab.labels)):
        series = num[a]
        f = np.zeros_like(series)
        for e, c in prod_poly.coeffs.items():
            f[e:] = f[e:] + c * series[: D + 1 - e]
        red = reduce_vector(f, m)
        coeffs = {}
        for d in range(D + 1):
            if any(red[d, 1:]):
                raise InternalError(f"fake polynomial coefficient of degree {d} is irrational")
            val = Fraction(int(red[d, 0]), tab.order)
            if val.denominator != 1 or val < 0:
                raise InternalError(f"fake polynomial coefficient {val} is not a natural number")
            if val and d > top:
                raise InternalError("fake polynomial exceeds the top coinvariant degree")
            coeffs[d] = int(val)
        out.append(LaurentPoly(coeffs))
    return tuple(out)


def fake_polynomial(lam: Multipartition, m: int, n: int) -> LaurentPoly:
    tab = character_table(m, n)
    return _fake_all(m, n)[tab.index(lam)]


def coinvariant_poincare(m: int, n: int) -> LaurentPoly:
    out = LaurentPoly({0: 1})
    for d in degrees(m, n):
        out = out * LaurentPoly.q_int(d)
    return out


def q_bracket(p: int, step: int = 1) -> LaurentPoly:
    return LaurentPoly.q_int(p, step)


def pcoinvariant_character(lam: Multipartition, m: int, n: int, p: int) -> LaurentPoly:
    out = fake_polynomial(lam, m, n)
    for d in degrees(m, n):
        out = out * LaurentPoly.q_int(p, d)
    return out


def I_poly(p: int, n: int) -> LaurentPoly:
    return LaurentPoly.q_int(p) ** n


# --- Brauer character of V_0(1) ------------------------------------------------------------


def brauer_char_cycles(cycles: Cycles, m: int, p: int) -> CyclotomicNumber:
    """Product over cycles: ``p`` for colour sum 0, else ``1 + a + ... + a^(p-1)``, ``a = zeta^k``."""
    vec = np.zeros(m, dtype=object)
    vec[0] = 1
    for _l, k in cycles:
        factor = np.zeros(m, dtype=object)
        if k % m == 0:
            factor[0] = p
        else:
            for j in range(p):
                factor[(k * j) % m] += 1
        nxt = np.zeros(m, dtype=object)
        for s in np.nonzero(factor)[0]:
            nxt = nxt + factor[s] * np.roll(vec, s)
        vec = nxt
    return CyclotomicNumber.from_vector(vec, m)


def brauer_char_V0(g: GroupElement, p: int) -> CyclotomicNumber:
    return brauer_char_cycles(g.cycles(), g.m, p)


# --- duals, Poincare formula, divisibility ------------------------------------------------


@lru_cache(maxsize=None)
def _dual_map(m: int, n: int) -> tuple[int, ...]:
    tab = character_table(m, n)
    red = tab.reduced()
    conj = reduce_vector(conj_vector(tab.values), m)
    out = []
    for a in range(len(tab.labels)):
        hits = [b for b in range(len(tab.labels)) if np.array_equal(conj[a], red[b])]
        if len(hits) != 1:
            raise InternalError(f"no unique dual for {tab.labels[a]}")
        out.append(hits[0])
    return tuple(out)


def dual_label(lam: Multipartition, m: int | None = None, n: int | None = None) -> Multipartition:
    m = lam.m if m is None else m
    n = lam.size if n is None else n
    tab = character_table(m, n)
    return tab.labels[_dual_map(m, n)[tab.index(lam)]]


class _NotPolynomial:
    """Marker returned when the Poincare quotient is not a Laurent polynomial."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotPolynomial"

    def __bool__(self):
        return False


NotPolynomial = _NotPolynomial()


def b_invariant(lam: Multipartition, m: int, n: int) -> int:
    return fake_polynomial(lam, m, n).valuation


def poincare_candidate(lam: Multipartition, m: int, n: int, p: int) -> LaurentPoly | _NotPolynomial:
    tab = character_table(m, n)
    dual = dual_label(lam, m, n)
    f_dual = fake_polynomial(dual, m, n)
    numer = coinvariant_poincare(m, n).subs_power(p) * I_poly(p, n) * tab.dim(lam)
    numer = numer.shift(p * f_dual.valuation)
    q = numer.divide_exact(f_dual.subs_power(p))
    if q is None or not q.has_integer_coeffs():
        return NotPolynomial
    return q


def divisibility_check(lam: Multipartition, m: int, n: int, p: int) -> bool:
    f_dual = fake_polynomial(dual_label(lam, m, n), m, n).subs_power(p)
    return coinvariant_poincare(m, n).subs_power(p).divide_exact(f_dual) is not None


def admissible_groups(p: int, budget: int | None = None, max_m: int | None = None) -> list[tuple[int, int]]:
    """(m, n) with n >= 1, |G(m,1,n)| within budget and p not dividing the order."""
    budget = DEFAULT_MAX_ORDER if budget is None else budget
    out = []
    m = 1
    while group_order(m, 1) <= budget and (max_m is None or m <= max_m):
        n = 1
        while group_order(m, n) <= budget:
            if m % p and n < p and not (m == 1 and n == 1):
                out.append((m, n))
            n += 1
        m += 1
    return out


def character_suite(m: int, n: int, primes: Sequence[int] = (5, 7)) -> dict[str, bool]:
    """Exact consistency checks of the character and Molien machinery for one group.

    Brauer and p-coinvariant checks are skipped for primes dividing |W|.
    """
    tab = character_table(m, n)
    W = tab.order
    L = len(tab.labels)
    G = tab.gram()
    out = {
        "orthogonality": bool(np.array_equal(G[..., 0], W * np.eye(L, dtype=np.int64)) and not G[..., 1:].any()),
        "fake(1) = dim": all(fake_polynomial(l, m, n)(1) == tab.dim(l) for l in tab.labels),
    }
    total = LaurentPoly({})
    for l in tab.labels:
        total = total + fake_polynomial(l, m, n) * tab.dim(l)
    out["sum dim*fake = coinvariant"] = total == coinvariant_poincare(m, n)
    triv = Multipartition(((n,),) + ((),) * (m - 1))
    D = n * m + 1
    expected = LaurentPoly({0: 1})
    for d in degrees(m, n):
        expected = expected * LaurentPoly({d * k: 1 for k in range(D // d + 1)})
    out["degrees from trivial Molien"] = molien_series(triv, m, n, D) == [Fraction(expected[d]) for d in range(D + 1)]
    for p in primes:
        if W % p == 0:
            continue
        pco = sum(tab.dim(l) * pcoinvariant_character(l, m, n, p)(1) for l in tab.labels)
        out[f"p={p}: pcoinvariant(1) = p^n|W|"] = pco == p**n * W
        out[f"p={p}: Brauer nonzero"] = all(not brauer_char_cycles(c, m, p).is_zero() for c in tab.classes)
    return out
