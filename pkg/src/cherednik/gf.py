"""Exact arithmetic in finite fields F_q = F_p[t]/(modulus).

Elements are stored as integer codes ``sum(c_i * p**i)`` where ``c_i`` are the
coordinates in the power basis ``1, t, ..., t^(r-1)``.  For fields with
``q <= TABLE_LIMIT`` the context lazily builds addition/multiplication tables,
which :mod:`cherednik.fqlinalg` uses for vectorised linear algebra.

>>> F9 = ctx_create(3, 2)
>>> F9.modulus_str
't^2+1'
>>> t = F9.gen
>>> str(artin_schreier(t))
't'
"""

from __future__ import annotations

import re
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import CtxMismatch, NonPrime, OrderNotDividing, ParseError, ReducibleModulus

TABLE_LIMIT = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over F_p as coefficient lists, low degree first -----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pmod(a, f, p):
    a = list(a)
    _trim(a)
    df = len(f) - 1
    inv = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv % p
        shift = len(a) - 1 - df
        for i, y in enumerate(f):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, f, p):
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial ``f`` (low degree first) over F_p."""
    f = _trim([c % p for c in f])
    r = len(f) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**r, f, p), x, p):
        return False
    for ell in prime_factors(r):
        h = _psub(_ppowmod(x, p ** (r // ell), f, p), x, p)
        if len(_pgcd(h, f, p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``r``.

    Coefficients are compared from the degree ``r-1`` term downwards.
    """
    for tail in product(range(p), repeat=r):
        f = list(reversed(tail)) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise ReducibleModulus(f"no irreducible of degree {r} over F_{p}")  # pragma: no cover


def min_extension_degree(p: int, m: int) -> int:
    """Least ``r`` with ``m | p**r - 1``."""
    if m % p == 0:
        raise OrderNotDividing(f"p={p} divides m={m}: no primitive {m}-th root exists")
    r, q = 1, p
    while (q - 1) % m:
        r += 1
        q *= p
    return r


def _poly_to_str(coeffs: Sequence[int], var: str = "t") -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"^(?:(\d+)(?:\*(?=[a-zA-Z]))?)?(?:([a-zA-Z])(?:\^(\d+))?)?$")


def parse_poly(s: str, p: int, var: str = "t") -> list[int]:
    """Parse text like ``"2*t+1"`` or ``"t^2-1"`` into coefficients mod p."""
    text = s.replace(" ", "")
    if not text:
        raise ParseError("empty polynomial")
    if text[0] not in "+-":
        text = "+" + text
    coeffs: dict[int, int] = {}
    for sign, body in re.findall(r"([+-])([^+-]*)", text):
        m = _TERM.match(body)
        if not body or m is None or (m.group(1) is None and m.group(2) is None):
            raise ParseError(f"cannot parse term {body!r} in {s!r}")
        if m.group(2) is not None and m.group(2) != var:
            raise ParseError(f"unknown symbol {m.group(2)!r} in {s!r}")
        c = int(m.group(1)) if m.group(1) is not None else 1
        e = 0 if m.group(2) is None else int(m.group(3) or 1)
        coeffs[e] = coeffs.get(e, 0) + (c if sign == "+" else -c)
    if "".join(re.findall(r"[+-][^+-]*", text)) != text:
        raise ParseError(f"cannot parse {s!r}")
    deg = max(coeffs)
    return [coeffs.get(i, 0) % p for i in range(deg + 1)]


# --- field context -------------------------------------------------------------

class FieldCtx:
    """The finite field F_p[t]/(modulus) of order ``q = p**r``.

    Use :func:`ctx_create` rather than the constructor; it validates input and
    interns contexts so equal fields share one object.
    """

    def __init__(self, p: int, r: int, modulus: tuple[int, ...]):
        self.p = p
        self.r = r
        self.modulus = modulus
        self.q = p**r
        self._pow = [p**i for i in range(r)]
        self._building = False

    @property
    def key(self):
        return (self.p, self.r, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, r={self.r}, modulus={self.modulus_str!r})"

    @property
    def modulus_str(self) -> str:
        return _poly_to_str(self.modulus)

    def describe(self) -> dict:
        return {"p": self.p, "r": self.r, "modulus": self.modulus_str}

    # codes <-> coefficient vectors
    def encode(self, coeffs: Iterable[int]) -> int:
        coeffs = _pmod([c % self.p for c in coeffs], self.modulus, self.p)
        return sum(c * w for c, w in zip(coeffs, self._pow))

    def decode(self, code: int) -> list[int]:
        out = []
        for _ in range(self.r):
            code, c = divmod(code, self.p)
            out.append(c)
        return out

    # scalar arithmetic on codes
    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        da, db = self.decode(a), self.decode(b)
        return sum(((x + y) % self.p) * w for x, y, w in zip(da, db, self._pow))

    def neg(self, a: int) -> int:
        if self.r == 1:
            return (-a) % self.p
        return sum(((-x) % self.p) * w for x, w in zip(self.decode(a), self._pow))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return a * b % self.p
        tb = self.__dict__.get("tables")
        if tb is None and self.has_tables and not self._building:
            tb = self.tables
        if tb is not None:
            return int(tb.mul[a, b])
        return self.encode(_pmod(_pmul(_trim(self.decode(a)), _trim(self.decode(b)), self.p), self.modulus, self.p))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self.pow(a, self.q - 2)

    # element constructors
    def __call__(self, value) -> "FieldElement":
        return self.element(value)

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            _check_same(self, value.ctx)
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, int(value) % self.p)
        return FieldElement(self, self.encode(value))

    def from_code(self, code: int) -> "FieldElement":
        return FieldElement(self, int(code))

    def parse(self, s: str) -> "FieldElement":
        coeffs = parse_poly(s, self.p)
        if self.r == 1 and len(coeffs) > 1:
            raise ParseError(f"{s!r} uses t, but F_{self.p} has no generator t (pass r >= 2)")
        return FieldElement(self, self.encode(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        """The class of ``t``."""
        return FieldElement(self, self.encode([0, 1]))

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, c) for c in range(self.q)]

    def prime_subfield(self) -> list["FieldElement"]:
        return [FieldElement(self, c) for c in range(self.p)]

    @cached_property
    def multiplicative_generator(self) -> "FieldElement":
        """Smallest code whose multiplicative order is ``q - 1``."""
        order = self.q - 1
        ells = prime_factors(order)
        for c in range(1, self.q):
            if all(self.pow(c, order // ell) != 1 for ell in ells):
                return FieldElement(self, c)
        raise AssertionError("field has no generator")  # pragma: no cover

    @property
    def has_tables(self) -> bool:
        return self.q <= TABLE_LIMIT

    @cached_property
    def tables(self) -> "FieldTables":
        self._building = True
        try:
            return FieldTables(self)
        finally:
            self._building = False


class FieldTables:
    """Dense lookup tables for vectorised arithmetic on codes."""

    def __init__(self, ctx: FieldCtx):
        q, p, r = ctx.q, ctx.p, ctx.r
        self.ctx = ctx
        codes = np.arange(q)
        digits = np.zeros((q, r), dtype=np.int64)
        rest = codes.copy()
        for i in range(r):
            digits[:, i] = rest % p
            rest //= p
        self.digits = digits
        self.weights = np.array([p**i for i in range(r)], dtype=np.int64)
        dt = np.int16 if q < 2**15 else np.int32
        self.dtype = dt
        s = (digits[:, None, :] + digits[None, :, :]) % p
        self.add = (s @ self.weights).astype(dt)
        self.neg = (((-digits) % p) @ self.weights).astype(dt)
        self.sub = self.add[:, self.neg]
        # multiplication through discrete logarithms
        g = ctx.multiplicative_generator.code
        exp = np.zeros(q - 1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            x = ctx.mul(x, g)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        la = log[1:]
        mul = np.zeros((q, q), dtype=dt)
        mul[1:, 1:] = exp[(la[:, None] + la[None, :]) % (q - 1)]
        self.mul = mul
        inv = np.zeros(q, dtype=dt)
        inv[1:] = exp[(-la) % (q - 1)]
        self.inv = inv
        # reduction of t^k, k < 2r - 1, to the power basis
        red = np.zeros((max(2 * r - 1, 1), r), dtype=np.int64)
        for k in range(2 * r - 1):
            red[k] = ctx.decode(ctx.encode([0] * k + [1]))
        self.reduce = red


def _check_same(c1: FieldCtx, c2: FieldCtx):
    if c1 is not c2 and c1 != c2:
        raise CtxMismatch(f"{c1!r} vs {c2!r}")


class FieldElement:
    """An element of a :class:`FieldCtx`; an immutable value type."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    def _coerce(self, other) -> int | None:
        if isinstance(other, FieldElement):
            _check_same(self.ctx, other.ctx)
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.ctx.p
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FieldElement(self.ctx, self.ctx.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FieldElement(self.ctx, self.ctx.sub(self.code, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FieldElement(self.ctx, self.ctx.sub(o, self.code))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FieldElement(self.ctx, self.ctx.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FieldElement(self.ctx, self.ctx.mul(self.code, self.ctx.inv(o)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FieldElement(self.ctx, self.ctx.mul(o, self.ctx.inv(self.code)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.code, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == int(other) % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.r, self.code))

    def __bool__(self):
        return self.code != 0

    def __lt__(self, other):
        # total order on codes, used only for canonical output
        return self.code < other.code

    @property
    def coeffs(self) -> list[int]:
        return self.ctx.decode(self.code)

    def frobenius(self) -> "FieldElement":
        return self ** self.ctx.p

    def __str__(self):
        return _poly_to_str(self.coeffs)

    def __repr__(self):
        return f"F{self.ctx.q}({self})"


# --- module-level API ------------------------------------------------------------

_CTX_CACHE: dict[tuple, FieldCtx] = {}


def parse_modulus(s: str, p: int) -> tuple[int, ...]:
    return tuple(parse_poly(s, p))


def ctx_create(p: int, r: int = 1, modulus: str | Sequence[int] | None = None) -> FieldCtx:
    """Create (or fetch) the field of order ``p**r``.

    ``modulus`` is optional: a string like ``"t^2+1"`` or a coefficient list,
    lowest degree first.  Without it the lexicographically smallest monic
    irreducible polynomial of degree ``r`` is used.
    """
    if not is_prime(p) or p < 3:
        raise NonPrime(f"characteristic must be an odd prime, got {p}")
    if r < 1:
        raise ValueError(f"extension degree must be >= 1, got {r}")
    if modulus is None:
        mod = smallest_irreducible(p, r)
    else:
        mod = parse_modulus(modulus, p) if isinstance(modulus, str) else tuple(c % p for c in modulus)
        mod = tuple(_trim(list(mod)))
        if len(mod) != r + 1 or mod[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {r}, got {_poly_to_str(mod)}")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"{_poly_to_str(mod)} is reducible over F_{p}")
    key = (p, r, mod)
    if key not in _CTX_CACHE:
        _CTX_CACHE[key] = FieldCtx(p, r, mod)
    return _CTX_CACHE[key]


def artin_schreier(a: FieldElement) -> FieldElement:
    """``a**p - a``; additive, with kernel the prime subfield."""
    return a.frobenius() - a


def in_prime_subfield(a: FieldElement) -> bool:
    return artin_schreier(a).code == 0


def primitive_root_of_unity(ctx: FieldCtx, m: int) -> FieldElement:
    if m < 1 or (ctx.q - 1) % m:
        raise OrderNotDividing(
            f"no primitive {m}-th root of unity in F_{ctx.q}; "
            f"need r >= {min_extension_degree(ctx.p, m) if m % ctx.p else 'impossible'}"
        )
    return ctx.multiplicative_generator ** ((ctx.q - 1) // m)


def multiplicative_order(a: FieldElement) -> int:
    if not a:
        raise ZeroDivisionError("zero has no multiplicative order")
    n = a.ctx.q - 1
    order = n
    for ell in prime_factors(n):
        while order % ell == 0 and (a ** (order // ell)).code == 1:
            order //= ell
    return order
