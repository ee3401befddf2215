"""Baby Verma modules, their simple heads and central characters."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .. import fqlinalg as fl
from ..combinatorics import Multipartition
from ..errors import NotCentral, NotSingleEigenvalue
from ..gf import FieldElement
from .pbw import RestrictedAlgebra


@dataclass(frozen=True)
class LinearCharacter:
    """A one-dimensional representation of the group, as codes per element."""

    name: str
    values: tuple[int, ...]
    label: Multipartition


def linear_characters(alg: RestrictedAlgebra) -> list[LinearCharacter]:
    """The irreducibles the oracle supports: all of C_m, or triv/sign of S_2."""
    G, ctx = alg.G, alg.ctx
    m, n = alg.m, alg.n
    if n == 1:
        out = []
        for i in range(m):
            vals = tuple((G.eta ** (i * G.elements[w].colors[0])).code for w in range(G.order))
            comps = [()] * m
            comps[i] = (1,)
            out.append(LinearCharacter(f"chi_{i}", vals, Multipartition(tuple(comps))))
        return out
    if m == 1 and n == 2:
        triv = tuple(1 for _ in range(G.order))
        sign = tuple(1 if G.elements[w].perm == (0, 1) else ctx.neg(1) for w in range(G.order))
        return [
            LinearCharacter("triv", triv, Multipartition(((2,),))),
            LinearCharacter("sign", sign, Multipartition(((1, 1),))),
        ]
    raise NotImplementedError("oracle modules cover C_m and S_2 only")


class ModuleOnBasis:
    """A finite-dimensional module given by action matrices of x_j, y_j and the group."""

    def __init__(self, alg: RestrictedAlgebra, x, y, g, degree, name: str = ""):
        self.alg = alg
        self.ctx = alg.ctx
        self.x: list[np.ndarray] = x
        self.y: list[np.ndarray] = y
        self.g: list[np.ndarray] = g
        self.degree = np.asarray(degree)
        self.dim = len(self.degree)
        self.name = name

    @cached_property
    def _x_mono(self) -> list[np.ndarray]:
        return self._chain(self.alg.A, self.x)

    @cached_property
    def _y_mono(self) -> list[np.ndarray]:
        return self._chain(self.alg.B, self.y)

    def _chain(self, ring, gens) -> list[np.ndarray]:
        out: list[np.ndarray] = [None] * ring.dim  # type: ignore[list-item]
        for b in range(ring.dim):
            sp = ring.split(b)
            out[b] = fl.identity(self.dim) if sp is None else fl.matmul(self.ctx, gens[sp[0]], out[sp[1]])
        return out

    def basis_action(self, a: int, w: int, c: int) -> np.ndarray:
        M = fl.matmul(self.ctx, self.g[w], self._y_mono[c])
        return fl.matmul(self.ctx, self._x_mono[a], M)

    def act(self, u: np.ndarray) -> np.ndarray:
        """Matrix of an algebra element."""
        alg, ctx = self.alg, self.ctx
        U = u.reshape(alg.nA, alg.nW, alg.nB)
        out = fl.zeros((self.dim, self.dim))
        for a, w, c in zip(*np.nonzero(U)):
            out = fl.add(ctx, out, fl.scale(ctx, int(U[a, w, c]), self.basis_action(a, w, c)))
        return out

    def check_relations(self) -> list[str]:
        """Names of defining relations that fail on this module."""
        alg, ctx, G = self.alg, self.ctx, self.alg.G
        mm = lambda A, B: fl.matmul(ctx, A, B)  # noqa: E731
        bad = []
        for i in range(alg.n):
            for j in range(alg.n):
                lhs = fl.sub(ctx, mm(self.y[i], self.x[j]), mm(self.x[j], self.y[i]))
                rhs = fl.zeros((self.dim, self.dim))
                for w, cw in alg.comm[i][j].items():
                    rhs = fl.add(ctx, rhs, fl.scale(ctx, cw, self.g[w]))
                if not np.array_equal(lhs, rhs):
                    bad.append(f"[y{i},x{j}]")
                if i < j:
                    if not np.array_equal(mm(self.x[i], self.x[j]), mm(self.x[j], self.x[i])):
                        bad.append(f"[x{i},x{j}]")
                    if not np.array_equal(mm(self.y[i], self.y[j]), mm(self.y[j], self.y[i])):
                        bad.append(f"[y{i},y{j}]")
        for w in range(G.order):
            for j in range(alg.n):
                sc, k = G.act_y(w, j)
                if not np.array_equal(mm(self.g[w], self.y[j]), fl.scale(ctx, sc, mm(self.y[k], self.g[w]))):
                    bad.append(f"w{w}.y{j}")
                sc, k = G.act_x(w, j)
                if not np.array_equal(mm(self.g[w], self.x[j]), fl.scale(ctx, sc, mm(self.x[k], self.g[w]))):
                    bad.append(f"w{w}.x{j}")
            for v in range(G.order):
                if not np.array_equal(mm(self.g[w], self.g[v]), self.g[int(G.mult[w, v])]):
                    bad.append(f"w{w}*w{v}")
        return bad


def baby_verma(alg: RestrictedAlgebra, lam: LinearCharacter) -> ModuleOnBasis:
    """``H ⊗ lam`` over ``k[y] ⋊ W``: realised on the x-side basis, lam in degree 0."""
    ctx = alg.ctx
    x = [M.copy() for M in alg.A.mul_var]
    g = [fl.scale(ctx, lam.values[w], alg.rhoA[w]) for w in range(alg.nW)]
    y = []
    for i in range(alg.n):
        M = fl.zeros((alg.nA, alg.nA))
        for u in range(alg.nW):
            if alg.D[i, u].any():
                M = fl.add(ctx, M, fl.scale(ctx, lam.values[u], alg.D[i, u]))
        y.append(M)
    return ModuleOnBasis(alg, x, y, g, alg.A.degree, name=lam.name)


def is_central(alg: RestrictedAlgebra, z: np.ndarray) -> bool:
    for L, R in alg.generator_pairs():
        if fl.matvec(alg.ctx, fl.sub(alg.ctx, L, R), z).any():
            return False
    return True


def central_character(alg: RestrictedAlgebra, module: ModuleOnBasis, z: np.ndarray, check: bool = True) -> FieldElement:
    """The single eigenvalue of a central element on an indecomposable module."""
    ctx = alg.ctx
    if check and not is_central(alg, z):
        raise NotCentral("element does not commute with the generators")
    M = module.act(z)
    low = int(np.argmin(module.degree))
    c = int(M[low, low])
    N = fl.sub(ctx, M, fl.scale(ctx, c, fl.identity(module.dim)))
    if fl.matpow(ctx, N, module.dim).any():
        raise NotSingleEigenvalue(f"central element has several eigenvalues on {module.name}")
    return ctx.from_code(c)


@dataclass
class SimpleHead:
    label: LinearCharacter
    dim: int
    module: ModuleOnBasis


def simple_head(alg: RestrictedAlgebra, verma: ModuleOnBasis, label: LinearCharacter) -> SimpleHead:
    """Quotient of a baby Verma module by its unique maximal submodule.

    A homogeneous vector of degree d lies in the radical iff no y-monomial of
    degree d carries it back to the (irreducible) degree-0 part.
    """
    ctx = alg.ctx
    deg = verma.degree
    low = np.nonzero(deg == 0)[0]
    keep_rows = []
    for d in sorted(set(deg.tolist())):
        cols = np.nonzero(deg == d)[0]
        if d == 0:
            keep_rows.append(np.eye(verma.dim, dtype=np.int64)[cols])
            continue
        maps = [verma._y_mono[c][np.ix_(low, cols)] for c in range(alg.nB) if alg.B.degree[c] == d]
        if not maps:
            continue
        Phi = np.vstack(maps)
        # row space of Phi inside Δ_d is the dual of the head in degree d
        R = fl.row_space(ctx, Phi)
        if len(R):
            block = fl.zeros((len(R), verma.dim))
            block[:, cols] = R
            keep_rows.append(block)
    F = np.vstack(keep_rows)  # functionals that define the quotient: L = image of Δ under F
    ell = F.shape[0]

    def quot(M):
        # action on L: F M = X F, solved via a right inverse of F
        return fl.matmul(ctx, fl.matmul(ctx, F, M), _right_inverse(ctx, F))

    x = [quot(M) for M in verma.x]
    y = [quot(M) for M in verma.y]
    g = [quot(M) for M in verma.g]
    fdeg = [int(deg[np.nonzero(row)[0][0]]) for row in F]
    L = ModuleOnBasis(alg, x, y, g, fdeg, name=f"L({verma.name})")
    _check_quotient(ctx, F, verma, L)
    return SimpleHead(label, ell, L)


def _right_inverse(ctx, F: np.ndarray) -> np.ndarray:
    """``S`` with ``F S = I`` for a full-row-rank F (pivot columns of its echelon form)."""
    R, piv = fl.rref(ctx, F)
    # F = T R with T invertible; columns of R at pivots form the identity
    T = fl.solve_left(ctx, R[: len(piv)], F)
    S = fl.zeros((F.shape[1], F.shape[0]))
    S[piv, :] = np.eye(len(piv), dtype=np.int64)
    return fl.matmul(ctx, S, fl.inverse(ctx, T))


def _check_quotient(ctx, F, verma: ModuleOnBasis, L: ModuleOnBasis):
    for M, N in zip(verma.x + verma.y + verma.g, L.x + L.y + L.g):
        if not np.array_equal(fl.matmul(ctx, F, M), fl.matmul(ctx, N, F)):
            raise AssertionError("radical is not a submodule")
