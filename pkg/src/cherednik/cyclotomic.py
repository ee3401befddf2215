"""Exact arithmetic in the cyclotomic field Q(zeta_M).

Numbers are kept in canonical form: a length ``phi(M)`` rational vector over
``1, zeta, ..., zeta^(phi(M)-1)``.  Bulk computations may stay in the group ring
Z[C_M] (length-M integer vectors, no reduction) and call :func:`reduce_vector`
only when equality has to be decided.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np


@lru_cache(maxsize=None)
def cyclotomic_poly(M: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_M, lowest degree first."""
    num = [-1] + [0] * (M - 1) + [1]  # x^M - 1
    for d in range(1, M):
        if M % d == 0:
            num = _divide(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _divide(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    assert not any(a), "inexact cyclotomic division"
    return q


def euler_phi(M: int) -> int:
    return sum(1 for k in range(1, M + 1) if gcd(k, M) == 1)


@lru_cache(maxsize=None)
def reduction_matrix(M: int) -> np.ndarray:
    """Row k holds the canonical coordinates of ``zeta^k``, 0 <= k < M."""
    phi = cyclotomic_poly(M)
    d = len(phi) - 1
    R = np.zeros((M, d), dtype=np.int64)
    cur = [0] * d
    cur[0] = 1
    for k in range(M):
        R[k] = cur
        # multiply by zeta, then eliminate zeta^d using the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return R


def reduce_vector(vec, M: int) -> np.ndarray:
    """Group-ring vector(s), last axis of length M, to canonical coordinates."""
    v = np.asarray(vec)
    if v.dtype == object:
        return v @ reduction_matrix(M).astype(object)
    return v @ reduction_matrix(M)


def conj_vector(vec) -> np.ndarray:
    """Complex conjugation on the group ring: zeta^k -> zeta^(-k)."""
    v = np.asarray(vec)
    return np.roll(v[..., ::-1], 1, axis=-1)


def cyclic_convolve(a, b) -> np.ndarray:
    """Product in Z[C_M] of two length-M vectors."""
    a, b = np.asarray(a), np.asarray(b)
    M = a.shape[-1]
    out = np.zeros(M, dtype=np.result_type(a, b))
    for k in np.nonzero(a)[0]:
        out += a[k] * np.roll(b, k)
    return out


class CyclotomicNumber:
    __slots__ = ("M", "coeffs")

    def __init__(self, M: int, coeffs):
        self.M = M
        d = len(cyclotomic_poly(M)) - 1
        c = [Fraction(x) for x in coeffs]
        if len(c) > d:
            raise ValueError("use from_vector for unreduced input")
        self.coeffs = tuple(c + [Fraction(0)] * (d - len(c)))

    @classmethod
    def from_vector(cls, vec, M: int) -> "CyclotomicNumber":
        vec = [Fraction(x) for x in vec]
        R = reduction_matrix(M)
        out = [Fraction(0)] * R.shape[1]
        for k, x in enumerate(vec):
            if x:
                for i, r in enumerate(R[k % M]):
                    if r:
                        out[i] += x * int(r)
        return cls(M, out)

    @classmethod
    def root(cls, M: int, k: int = 1) -> "CyclotomicNumber":
        vec = [0] * M
        vec[k % M] = 1
        return cls.from_vector(vec, M)

    @classmethod
    def rational(cls, M: int, x) -> "CyclotomicNumber":
        return cls(M, [x])

    def _other(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.M != self.M:
                raise ValueError("different cyclotomic fields")
            return other
        return CyclotomicNumber.rational(self.M, other)

    def __add__(self, other):
        o = self._other(other)
        return CyclotomicNumber(self.M, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.M, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        d = len(self.coeffs)
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicNumber.from_vector(prod, self.M) if 2 * d - 1 <= self.M else _reduce_long(prod, self.M)

    __rmul__ = __mul__

    def conj(self) -> "CyclotomicNumber":
        vec = [Fraction(0)] * self.M
        for i, a in enumerate(self.coeffs):
            vec[(-i) % self.M] += a
        return CyclotomicNumber.from_vector(vec, self.M)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        z = np.exp(2j * np.pi / self.M)
        return complex(sum(float(a) * z**i for i, a in enumerate(self.coeffs)))

    def __eq__(self, other):
        try:
            o = self._other(other)
        except (ValueError, TypeError):
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.M, self.coeffs))

    def __repr__(self):
        terms = [f"{a}*z^{i}" if i else str(a) for i, a in enumerate(self.coeffs) if a]
        return f"Cyc{self.M}(" + (" + ".join(terms) or "0") + ")"


def _reduce_long(prod, M: int) -> CyclotomicNumber:
    vec = [Fraction(0)] * M
    for i, a in enumerate(prod):
        vec[i % M] += a
    return CyclotomicNumber.from_vector(vec, M)
