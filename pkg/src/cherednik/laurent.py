"""Laurent polynomials in ``t`` with integer or rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int | Fraction] | Iterable = ()):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        c = {}
        for e, v in items:
            if v:
                c[int(e)] = c.get(int(e), 0) + v
        self._c = {e: _norm(v) for e, v in c.items() if v}

    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def q_int(cls, k: int, step: int = 1) -> "LaurentPoly":
        """``1 + s + ... + s^(k-1)`` with ``s = t^step``."""
        return cls({step * j: 1 for j in range(k)})

    @property
    def coeffs(self) -> dict[int, int | Fraction]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def valuation(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def __getitem__(self, e: int):
        return self._c.get(e, 0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self):
        return hash(tuple(sorted(self._c.items())))

    def __add__(self, other):
        other = _lift(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out: dict[int, int | Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = LaurentPoly({0: 1})
        for _ in range(k):
            result = result * self
        return result

    def subs_power(self, k: int) -> "LaurentPoly":
        """Substitute ``t -> t^k``."""
        return LaurentPoly({e * k: v for e, v in self._c.items()})

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def __call__(self, x):
        return sum((v * x**e for e, v in self._c.items()), 0)

    def is_polynomial(self) -> bool:
        return not self._c or self.valuation >= 0

    def has_integer_coeffs(self) -> bool:
        return all(isinstance(v, int) for v in self._c.values())

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Quotient in the Laurent ring, or None when ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        a_shift, b_shift = self.valuation, other.valuation
        num = [self[e] for e in range(a_shift, self.degree + 1)]
        den = [other[e] for e in range(b_shift, other.degree + 1)]
        if len(den) > len(num):
            return None
        lead = Fraction(den[-1])
        num = [Fraction(x) for x in num]
        q = [Fraction(0)] * (len(num) - len(den) + 1)
        for i in range(len(q) - 1, -1, -1):
            c = num[i + len(den) - 1] / lead
            q[i] = c
            if c:
                for j, d in enumerate(den):
                    num[i + j] -= c * d
        if any(num):
            return None
        return LaurentPoly({i + a_shift - b_shift: v for i, v in enumerate(q)})

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for e in sorted(self._c):
            v = self._c[e]
            if e == 0:
                terms.append(str(v))
            else:
                mono = "t" if e == 1 else f"t^{e}"
                terms.append(mono if v == 1 else f"{v}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_list(self) -> list:
        """Coefficients from degree 0 to the top degree (polynomials only)."""
        if not self._c:
            return []
        if self.valuation < 0:
            raise ValueError("not a polynomial")
        return [self[e] for e in range(self.degree + 1)]


def _norm(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v.numerator)
    return v


def _lift(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")
