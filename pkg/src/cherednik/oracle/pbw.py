"""Restricted rational Cherednik algebras as explicit algebras over F_q.

The restricted algebra is realised on its PBW basis ``x^a * w * y^c`` where
``x^a`` runs over a monomial basis of the x-side p-coinvariant ring
``A = k[x]/(e_k(x_i^{pm}))``, ``w`` over the group and ``y^c`` over the
analogous basis of the y-side ring ``B``.  Both Frobenius ideals are generated
by central elements, so commutators can be computed directly in the quotients.

Every algebra element is a vector of codes of length ``dim``; the algebra acts
on itself through left and right multiplication matrices of the generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from .. import fqlinalg as fl
from ..blocks import ParameterSet
from ..characters import GroupElement, group_elements
from ..errors import BudgetExceeded, InternalError
from ..gf import FieldCtx, primitive_root_of_unity
from ..laurent import LaurentPoly

DEFAULT_MAX_DIM = 2000

Monomial = tuple[int, ...]


def _monomials(n: int, d: int) -> list[Monomial]:
    """Monomials of degree d in n variables, lexicographically decreasing."""
    if n == 1:
        return [(d,)]
    return [(k,) + rest for k in range(d, -1, -1) for rest in _monomials(n - 1, d - k)]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class QuotientRing:
    """``k[v_1..v_n] / (e_k(v_i^{pm}) : k = 1..n)`` with a standard-monomial basis.

    The basis is found degree by degree: the ideal's degree-d part is spanned by
    monomial multiples of the generators, and the non-leading monomials of its
    echelon form give the basis.  The dimension count per degree is checked
    against ``prod_k (1 - t^{pmk}) / (1 - t)``.
    """

    def __init__(self, ctx: FieldCtx, n: int, m: int):
        self.ctx, self.n, self.m = ctx, n, m
        p = ctx.p
        gdeg = [p * m * k for k in range(1, n + 1)]
        gens = []
        for k in range(1, n + 1):
            poly = {}
            for S in combinations(range(n), k):
                mono = tuple(p * m if i in S else 0 for i in range(n))
                poly[mono] = 1
            gens.append(poly)
        self.top = sum(d - 1 for d in gdeg)
        expected = LaurentPoly({0: 1})
        for d in gdeg:
            expected = expected * LaurentPoly.q_int(d)
        self.basis: list[Monomial] = []
        self.degree: list[int] = []
        self._nf: dict[Monomial, dict[int, int]] = {}
        for d in range(self.top + 2):
            monos = _monomials(n, d)
            col = {mono: i for i, mono in enumerate(monos)}
            rows = []
            for g, gd in zip(gens, gdeg):
                if gd > d:
                    continue
                for u in _monomials(n, d - gd):
                    row = np.zeros(len(monos), dtype=np.int64)
                    for mono, c in g.items():
                        row[col[_mono_mul(u, mono)]] = c % p
                    rows.append(row)
            if rows:
                R, pivots = fl.rref(ctx, np.array(rows))
            else:
                R, pivots = np.zeros((0, len(monos)), dtype=np.int64), []
            pivset = set(pivots)
            standard = [i for i in range(len(monos)) if i not in pivset]
            if len(standard) != expected[d]:
                raise InternalError(f"coinvariant dimension in degree {d} is {len(standard)}, expected {expected[d]}")
            start = len(self.basis)
            for i in standard:
                self.basis.append(monos[i])
                self.degree.append(d)
                self._nf[monos[i]] = {start + standard.index(i): 1}
            for r, pc in enumerate(pivots):
                nf = {}
                for i in standard:
                    if R[r, i]:
                        nf[start + standard.index(i)] = int(fl.neg(ctx, R[r, i]))
                self._nf[monos[pc]] = nf
        self.dim = len(self.basis)
        self.index = {mono: i for i, mono in enumerate(self.basis)}

    def normal_form(self, mono: Monomial) -> dict[int, int]:
        if sum(mono) > self.top + 1:
            return {}
        return self._nf[mono]

    def vector(self, mono: Monomial, coeff: int = 1) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        for i, c in self.normal_form(mono).items():
            v[i] = self.ctx.mul(c, coeff)
        return v

    @cached_property
    def mul_var(self) -> list[np.ndarray]:
        """Matrices of multiplication by each variable."""
        out = []
        for j in range(self.n):
            M = np.zeros((self.dim, self.dim), dtype=np.int64)
            e = tuple(1 if i == j else 0 for i in range(self.n))
            for b, mono in enumerate(self.basis):
                M[:, b] = self.vector(_mono_mul(mono, e))
            out.append(M)
        return out

    def split(self, b: int) -> tuple[int, int] | None:
        """``(j, b')`` with basis[b] = v_j * basis[b'], j minimal; None for 1."""
        mono = self.basis[b]
        for j, e in enumerate(mono):
            if e:
                prev = tuple(x - (1 if i == j else 0) for i, x in enumerate(mono))
                return j, self.index[prev]
        return None

    @cached_property
    def mul_basis(self) -> list[np.ndarray]:
        """Multiplication matrix of every basis monomial."""
        out: list[np.ndarray] = [None] * self.dim  # type: ignore[list-item]
        for b in range(self.dim):
            sp = self.split(b)
            if sp is None:
                out[b] = fl.identity(self.dim)
            else:
                j, prev = sp
                out[b] = fl.matmul(self.ctx, self.mul_var[j], out[prev])
        return out

    def monomial_action(self, scalars: list[int], perm: tuple[int, ...]) -> np.ndarray:
        """Matrix of the substitution ``v_i -> scalars[i] * v_{perm[i]}``."""
        M = np.zeros((self.dim, self.dim), dtype=np.int64)
        for b, mono in enumerate(self.basis):
            new = [0] * self.n
            coeff = 1
            for i, e in enumerate(mono):
                new[perm[i]] += e
                coeff = self.ctx.mul(coeff, self.ctx.pow(scalars[i], e))
            M[:, b] = self.vector(tuple(new), coeff)
        return M


@dataclass
class Group:
    """G(m,1,n) with its action on V (the y's) and V* (the x's) over ctx."""

    ctx: FieldCtx
    m: int
    n: int
    elements: list[GroupElement] = field(init=False)

    def __post_init__(self):
        self.elements = list(group_elements(self.m, self.n))
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.order = len(self.elements)
        self.eta = primitive_root_of_unity(self.ctx, self.m)
        N = self.order
        self.mult = np.array([[self.index[a * b] for b in self.elements] for a in self.elements], dtype=np.int64)
        self.inv = np.array([self.index[a.inverse()] for a in self.elements], dtype=np.int64)
        self.identity = self.index[GroupElement.identity(self.m, self.n)]
        assert self.mult.shape == (N, N)

    def g(self, i: int, l: int = 1) -> int:
        colors = tuple(l % self.m if j == i else 0 for j in range(self.n))
        return self.index[GroupElement(tuple(range(self.n)), colors, self.m)]

    def s(self, i: int, j: int) -> int:
        perm = list(range(self.n))
        perm[i], perm[j] = j, i
        return self.index[GroupElement(tuple(perm), (0,) * self.n, self.m)]

    def word(self, *idx: int) -> int:
        out = self.identity
        for i in idx:
            out = int(self.mult[out, i])
        return out

    def act_y(self, w: int, j: int) -> tuple[int, int]:
        """``w . y_j = scalar * y_k``; returns (scalar code, k)."""
        g = self.elements[w]
        k = g.perm[j]
        return (self.eta ** g.colors[k]).code, k

    def act_x(self, w: int, j: int) -> tuple[int, int]:
        g = self.elements[w]
        k = g.perm[j]
        return (self.eta ** (-g.colors[k])).code, k

    def generators(self) -> list[int]:
        gens = [self.g(0)] if self.m > 1 else []
        gens += [self.s(i, i + 1) for i in range(self.n - 1)]
        return gens or [self.identity]


class RestrictedAlgebra:
    """The restricted rational Cherednik algebra of G(m,1,n) at parameters ``ps``."""

    def __init__(self, ps: ParameterSet, max_dim: int = DEFAULT_MAX_DIM):
        self.ps = ps
        ctx = self.ctx = ps.ctx
        self.m, self.n = ps.m, ps.n
        p = ctx.p
        W = ps.order
        expected = (p**self.n * W) ** 2 * W
        if expected > max_dim:
            raise BudgetExceeded(f"restricted algebra of dimension {expected} exceeds budget {max_dim}")
        self.G = Group(ctx, self.m, self.n)
        self.A = QuotientRing(ctx, self.n, self.m)
        self.B = QuotientRing(ctx, self.n, self.m)
        self.nA, self.nW, self.nB = self.A.dim, self.G.order, self.B.dim
        self.dim = self.nA * self.nW * self.nB
        if self.dim != expected:
            raise InternalError(f"PBW dimension {self.dim} != {expected}")
        self._build_commutators()
        self._build_group_actions()
        self._build_derivations()

    # --- indexing -------------------------------------------------------------------
    def idx(self, a: int, w: int, c: int) -> int:
        return (a * self.nW + w) * self.nB + c

    @cached_property
    def degrees(self) -> np.ndarray:
        dA = np.array(self.A.degree)
        dB = np.array(self.B.degree)
        return np.broadcast_to(dA[:, None, None] - dB[None, None, :], (self.nA, self.nW, self.nB)).reshape(-1)

    # --- relations ------------------------------------------------------------------
    def _build_commutators(self):
        """``comm[i][j]``: dict group index -> code with [y_i, x_j] = sum c_w w."""
        ctx, G, ps = self.ctx, self.G, self.ps
        eta = G.eta
        kappa = ps.kappa
        n, m = self.n, self.m
        comm = [[{} for _ in range(n)] for _ in range(n)]

        def add(d, w, val):
            d[w] = ctx.add(d.get(w, 0), val.code)

        for i in range(n):
            add(comm[i][i], G.identity, ctx.one)
            for j in range(n):
                if j == i:
                    continue
                for l in range(m):
                    w = G.word(G.s(i, j), G.g(i, -l), G.g(j, l))
                    add(comm[i][i], w, -kappa)
                    add(comm[i][j], w, kappa * eta ** (-l))
            for l in range(1, m):
                add(comm[i][i], G.g(i, l), -(ps.c[l - 1] * (1 - eta ** (-l))))
        self.comm = [[{w: c for w, c in d.items() if c} for d in row] for row in comm]

    def _build_group_actions(self):
        G = self.G
        self.rhoA = []
        self.rhoB = []
        for w in range(G.order):
            sx = [G.act_x(w, j) for j in range(self.n)]
            sy = [G.act_y(w, j) for j in range(self.n)]
            self.rhoA.append(self.A.monomial_action([s for s, _ in sx], tuple(k for _, k in sx)))
            self.rhoB.append(self.B.monomial_action([s for s, _ in sy], tuple(k for _, k in sy)))

    def _build_derivations(self):
        """``D[i][u]``: [y_i, f] = sum_u (D[i][u] f) u for f in A.
        ``E[j][u]``: [g, x_j] = sum_u u (E[j][u] g) for g in B."""
        ctx, G, A, B = self.ctx, self.G, self.A, self.B
        n, nW = self.n, G.order
        D = np.zeros((n, nW, A.dim, A.dim), dtype=np.int64)
        for i in range(n):
            for b in range(A.dim):
                sp = A.split(b)
                if sp is None:
                    continue
                j, prev = sp
                for u in range(nW):
                    col = fl.matvec(ctx, A.mul_var[j], D[i, u][:, prev])
                    cu = self.comm[i][j].get(u, 0)
                    if cu:
                        col = fl.add(ctx, col, fl.scale(ctx, cu, self.rhoA[u][:, prev]))
                    D[i, u][:, b] = col
        E = np.zeros((n, nW, B.dim, B.dim), dtype=np.int64)
        for j in range(n):
            for b in range(B.dim):
                sp = B.split(b)
                if sp is None:
                    continue
                i, prev = sp
                for u in range(nW):
                    # y_i u = u (u^{-1} . y_i)
                    sc, k = G.act_y(int(G.inv[u]), i)
                    col = fl.scale(ctx, sc, fl.matvec(ctx, B.mul_var[k], E[j, u][:, prev]))
                    cu = self.comm[i][j].get(u, 0)
                    if cu:
                        col = fl.add(ctx, col, fl.scale(ctx, cu, fl.identity(B.dim)[:, prev]))
                    E[j, u][:, b] = col
        self.D, self.E = D, E

    # --- regular representations ------------------------------------------------------
    def _perm_left(self, g: int) -> np.ndarray:
        P = np.zeros((self.nW, self.nW), dtype=np.int64)
        for w in range(self.nW):
            P[self.G.mult[g, w], w] = 1
        return P

    def _perm_right(self, g: int) -> np.ndarray:
        P = np.zeros((self.nW, self.nW), dtype=np.int64)
        for w in range(self.nW):
            P[self.G.mult[w, g], w] = 1
        return P

    def _kron3(self, X, Wm, Y) -> np.ndarray:
        return fl.kron(self.ctx, fl.kron(self.ctx, X, Wm), Y)

    def _unit(self, w: int) -> np.ndarray:
        E = np.zeros((self.nW, self.nW), dtype=np.int64)
        E[w, w] = 1
        return E

    @cached_property
    def Lx(self) -> list[np.ndarray]:
        IW, IB = fl.identity(self.nW), fl.identity(self.nB)
        return [self._kron3(self.A.mul_var[j], IW, IB) for j in range(self.n)]

    @cached_property
    def Lg(self) -> list[np.ndarray]:
        IB = fl.identity(self.nB)
        return [self._kron3(self.rhoA[g], self._perm_left(g), IB) for g in range(self.nW)]

    @cached_property
    def Ly(self) -> list[np.ndarray]:
        ctx, IA = self.ctx, fl.identity(self.nA)
        IB = fl.identity(self.nB)
        out = []
        for i in range(self.n):
            M = fl.zeros((self.dim, self.dim))
            for w in range(self.nW):
                sc, k = self.G.act_y(int(self.G.inv[w]), i)
                M = fl.add(ctx, M, self._kron3(IA, self._unit(w), fl.scale(ctx, sc, self.B.mul_var[k])))
            for u in range(self.nW):
                if self.D[i, u].any():
                    M = fl.add(ctx, M, self._kron3(self.D[i, u], self._perm_left(u), IB))
            out.append(M)
        return out

    @cached_property
    def Ry(self) -> list[np.ndarray]:
        IA, IW = fl.identity(self.nA), fl.identity(self.nW)
        return [self._kron3(IA, IW, self.B.mul_var[j]) for j in range(self.n)]

    @cached_property
    def Rg(self) -> list[np.ndarray]:
        IA = fl.identity(self.nA)
        return [self._kron3(IA, self._perm_right(g), self.rhoB[int(self.G.inv[g])]) for g in range(self.nW)]

    @cached_property
    def Rx(self) -> list[np.ndarray]:
        ctx, IA, IB = self.ctx, fl.identity(self.nA), fl.identity(self.nB)
        out = []
        for j in range(self.n):
            M = fl.zeros((self.dim, self.dim))
            for w in range(self.nW):
                sc, k = self.G.act_x(w, j)
                M = fl.add(ctx, M, self._kron3(fl.scale(ctx, sc, self.A.mul_var[k]), self._unit(w), IB))
            for u in range(self.nW):
                if self.E[j, u].any():
                    M = fl.add(ctx, M, self._kron3(IA, self._perm_right(u), self.E[j, u]))
            out.append(M)
        return out

    def generator_pairs(self) -> list[tuple[np.ndarray, np.ndarray]]:
        """(left, right) multiplication matrices of a generating set."""
        pairs = list(zip(self.Lx, self.Rx)) + list(zip(self.Ly, self.Ry))
        pairs += [(self.Lg[g], self.Rg[g]) for g in self.G.generators()]
        return pairs

    # --- elements ----------------------------------------------------------------------
    def zero(self) -> np.ndarray:
        return fl.zeros(self.dim)

    def one(self) -> np.ndarray:
        return self.basis_vector(0, self.G.identity, 0)

    def basis_vector(self, a: int, w: int, c: int, coeff: int = 1) -> np.ndarray:
        v = self.zero()
        v[self.idx(a, w, c)] = coeff
        return v

    def x(self, j: int) -> np.ndarray:
        e = tuple(1 if i == j else 0 for i in range(self.n))
        return self.basis_vector(self.A.index[e], self.G.identity, 0)

    def y(self, j: int) -> np.ndarray:
        e = tuple(1 if i == j else 0 for i in range(self.n))
        return self.basis_vector(0, self.G.identity, self.B.index[e])

    def group(self, w: int) -> np.ndarray:
        return self.basis_vector(0, w, 0)

    def scalar(self, c) -> np.ndarray:
        return fl.scale(self.ctx, self.ctx.element(c).code, self.one())

    def add(self, *vs) -> np.ndarray:
        out = self.zero()
        for v in vs:
            out = fl.add(self.ctx, out, v)
        return out

    def sub(self, u, v) -> np.ndarray:
        return fl.sub(self.ctx, u, v)

    def scale(self, c, v) -> np.ndarray:
        return fl.scale(self.ctx, self.ctx.element(c).code, v)

    # --- multiplication -------------------------------------------------------------------
    @cached_property
    def _y_chain(self) -> list[tuple[int, int] | None]:
        return [self.B.split(c) for c in range(self.nB)]

    def product(self, u: np.ndarray, V: np.ndarray) -> np.ndarray:
        """``u * V`` where V is a vector or a matrix whose columns are elements."""
        ctx = self.ctx
        vec = V.ndim == 1
        V = V[:, None] if vec else V
        k = V.shape[1]
        U = u.reshape(self.nA, self.nW, self.nB)
        # y^c V for every basis monomial c
        Yv = np.zeros((self.nB, self.dim, k), dtype=np.int64)
        Yv[0] = V
        for c in range(1, self.nB):
            i, prev = self._y_chain[c]
            Yv[c] = fl.matmul(ctx, self.Ly[i], Yv[prev])
        S = fl.matmul(ctx, U.reshape(self.nA * self.nW, self.nB), Yv.reshape(self.nB, -1))
        S = S.reshape(self.nA, self.nW, self.dim, k)
        out = fl.zeros((self.dim, k))
        for a in range(self.nA):
            if not S[a].any():
                continue
            T = fl.zeros((self.dim, k))
            for w in range(self.nW):
                if S[a, w].any():
                    T = fl.add(ctx, T, self._apply_group_left(w, S[a, w]))
            out = fl.add(ctx, out, self._apply_x_left(a, T))
        return out[:, 0] if vec else out

    def _apply_group_left(self, w: int, V: np.ndarray) -> np.ndarray:
        T = V.reshape(self.nA, self.nW, self.nB, -1)
        T = T[:, self._left_perm_index(w)]
        T = fl.matmul(self.ctx, self.rhoA[w], T.reshape(self.nA, -1))
        return T.reshape(self.dim, -1)

    def _left_perm_index(self, w: int) -> np.ndarray:
        # new[:, w w'] = old[:, w']  <=>  new[:, v] = old[:, w^{-1} v]
        winv = int(self.G.inv[w])
        return np.array([self.G.mult[winv, v] for v in range(self.nW)], dtype=np.int64)

    def _apply_x_left(self, a: int, V: np.ndarray) -> np.ndarray:
        T = V.reshape(self.nA, -1)
        return fl.matmul(self.ctx, self.A.mul_basis[a], T).reshape(self.dim, -1)

    def mul(self, *elts: np.ndarray) -> np.ndarray:
        out = elts[-1]
        for u in reversed(elts[:-1]):
            out = self.product(u, out)
        return out

    def power(self, u: np.ndarray, e: int) -> np.ndarray:
        result, base = self.one(), u
        while e:
            if e & 1:
                result = self.product(base, result)
            e >>= 1
            if e:
                base = self.product(base, base)
        return result

    def commutator(self, u, v) -> np.ndarray:
        return self.sub(self.product(u, v), self.product(v, u))

    def left_matrix(self, u: np.ndarray) -> np.ndarray:
        return self.product(u, fl.identity(self.dim))

    def group_sum(self, terms: dict[int, int]) -> np.ndarray:
        v = self.zero()
        for w, c in terms.items():
            v[self.idx(0, w, 0)] = self.ctx.add(int(v[self.idx(0, w, 0)]), c)
        return v

    # --- restricted ideal generators -------------------------------------------------------
    def frobenius_invariants(self) -> list[tuple[np.ndarray, np.ndarray]]:
        """(e_k(x^{pm}), e_k(y^{pm})) as elements computed by explicit products."""
        p, m = self.ctx.p, self.m
        out = []
        for k in range(1, self.n + 1):
            ex, ey = self.zero(), self.zero()
            for S in combinations(range(self.n), k):
                tx, ty = self.one(), self.one()
                for i in S:
                    tx = self.product(self.power(self.x(i), p * m), tx)
                    ty = self.product(self.power(self.y(i), p * m), ty)
                ex, ey = self.add(ex, tx), self.add(ey, ty)
            out.append((ex, ey))
        return out


def build_restricted_rank1(m: int, ps: ParameterSet, **kw) -> RestrictedAlgebra:
    if ps.n != 1 or ps.m != m:
        raise ValueError("rank-one builder needs n = 1 and matching m")
    return RestrictedAlgebra(ps, **kw)


def build_restricted_s2(ps: ParameterSet, **kw) -> RestrictedAlgebra:
    if ps.m != 1 or ps.n != 2:
        raise ValueError("S_2 builder needs m = 1, n = 2")
    if ps.ctx.p > 3 and kw.get("max_dim") is None:
        raise BudgetExceeded("S_2 oracle is sized for p = 3 (dimension 648)")
    return RestrictedAlgebra(ps, **kw)


def expected_dimension(p: int, m: int, n: int) -> int:
    from math import factorial

    W = m**n * factorial(n)
    return p ** (2 * n) * W**3


__all__ = [
    "QuotientRing",
    "RestrictedAlgebra",
    "build_restricted_rank1",
    "build_restricted_s2",
    "expected_dimension",
]
