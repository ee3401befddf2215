"""Centre, blocks, Jacobson radical and Dunkl–Opdam identities of a restricted algebra."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .. import fqlinalg as fl
from ..errors import IdentityViolated, RadicalCheckFailed, SplitFailure
from ..gf import FieldElement
from ..laurent import LaurentPoly
from .modules import (
    LinearCharacter,
    ModuleOnBasis,
    SimpleHead,
    baby_verma,
    central_character,
    linear_characters,
    simple_head,
)
from .pbw import RestrictedAlgebra


# --- centre ----------------------------------------------------------------------------------
def centre_basis(alg: RestrictedAlgebra) -> np.ndarray:
    """Rows span the centre; computed degree by degree since the generators are homogeneous."""
    ctx = alg.ctx
    stacked = np.vstack([fl.sub(ctx, L, R) for L, R in alg.generator_pairs()])
    deg = alg.degrees
    rows = []
    for d in sorted(set(deg.tolist())):
        cols = np.nonzero(deg == d)[0]
        sub = stacked[:, cols]
        sub = sub[sub.any(axis=1)]
        for v in fl.nullspace(ctx, sub):
            z = fl.zeros(alg.dim)
            z[cols] = v
            rows.append(z)
    return np.array(rows, dtype=np.int64).reshape(-1, alg.dim)


def frobenius_matrix(alg: RestrictedAlgebra, Z: np.ndarray) -> np.ndarray:
    """Matrix (acting on row coordinates) of the F_q-linear map z -> z^q on the centre."""
    q = alg.ctx.q
    images = np.array([alg.power(z, q) for z in Z], dtype=np.int64)
    X = fl.solve_left(alg.ctx, Z, images)
    if X is None:
        raise SplitFailure("q-th powers left the centre")
    return X


@dataclass
class CentreData:
    basis: np.ndarray
    frobenius: np.ndarray
    nil_dim: int
    fixed_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n_blocks(self) -> int:
        # each local factor F_{q^e} + nil contributes exactly one Frobenius-fixed line
        return self.fixed_dim

    @property
    def split(self) -> bool:
        return self.dim - self.nil_dim == self.fixed_dim


def centre_data(alg: RestrictedAlgebra) -> CentreData:
    ctx = alg.ctx
    Z = centre_basis(alg)
    k = len(Z)
    Phi = frobenius_matrix(alg, Z)
    steps = 1
    while alg.ctx.q**steps < max(k, 2):
        steps += 1
    nil = fl.nullspace(ctx, fl.matpow(ctx, Phi, steps).T)
    fixed = fl.nullspace(ctx, fl.sub(ctx, Phi, fl.identity(k)).T)
    return CentreData(Z, Phi, len(nil), len(fixed))


# --- blocks ---------------------------------------------------------------------------------
@dataclass
class BlockReport:
    n_blocks: int
    centre_dim: int
    nil_dim: int
    classes: list[list[str]]
    central_characters: dict[str, list[str]]

    def to_json(self) -> dict:
        return {
            "blocks": self.n_blocks,
            "centre_dim": self.centre_dim,
            "nil_dim": self.nil_dim,
            "classes": self.classes,
            "central_characters": self.central_characters,
        }


def block_decomposition(alg: RestrictedAlgebra, cd: CentreData | None = None) -> BlockReport:
    """Group the labels by central character; the count must match the centre's local factors."""
    cd = cd or centre_data(alg)
    if not cd.split:
        raise SplitFailure("centre modulo nilradical is not split over the base field")
    chars: dict[str, tuple[int, ...]] = {}
    for lam in linear_characters(alg):
        V = baby_verma(alg, lam)
        chars[str(lam.label)] = tuple(central_character(alg, V, z, check=False).code for z in cd.basis)
    groups: dict[tuple[int, ...], list[str]] = {}
    for name, ch in chars.items():
        groups.setdefault(ch, []).append(name)
    if len(groups) != cd.n_blocks:
        raise SplitFailure(f"{len(groups)} central characters but {cd.n_blocks} local factors")
    return BlockReport(
        cd.n_blocks,
        cd.dim,
        cd.nil_dim,
        list(groups.values()),
        {k: [str(alg.ctx.from_code(c)) for c in v] for k, v in chars.items()},
    )


# --- simple heads and the radical --------------------------------------------------------------
def simple_heads(alg: RestrictedAlgebra) -> list[SimpleHead]:
    return [simple_head(alg, baby_verma(alg, lam), lam) for lam in linear_characters(alg)]


def jacobson_radical(alg: RestrictedAlgebra, heads: list[SimpleHead], seed: int = 0, trials: int = 3) -> np.ndarray:
    """Kernel of the algebra acting on all simple heads, checked to be nilpotent."""
    ctx = alg.ctx
    cols = []
    for h in heads:
        L = h.module
        block = np.empty((alg.dim, L.dim * L.dim), dtype=np.int64)
        for a in range(alg.nA):
            for w in range(alg.nW):
                for c in range(alg.nB):
                    block[alg.idx(a, w, c)] = L.basis_action(a, w, c).reshape(-1)
        cols.append(block)
    Rep = np.hstack(cols)  # row u = image of basis element u
    wedderburn = sum(h.dim**2 for h in heads)
    if fl.rank(ctx, Rep) != wedderburn:
        raise RadicalCheckFailed("simple heads are not pairwise non-isomorphic absolutely simple modules")
    J = fl.nullspace(ctx, Rep.T)
    if len(J) != alg.dim - wedderburn:
        raise RadicalCheckFailed("radical dimension does not match the Wedderburn count")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        if not len(J):
            break
        u = fl.matmul(ctx, rng.integers(0, ctx.q, (1, len(J))), J)[0]
        if alg.power(u, alg.dim).any():
            raise RadicalCheckFailed("kernel on simple heads contains a non-nilpotent element")
    return J


def simple_head_dims(alg: RestrictedAlgebra, verify: bool = True) -> dict[str, int]:
    heads = simple_heads(alg)
    if verify:
        jacobson_radical(alg, heads)
    return {str(h.label.label): h.dim for h in heads}


# --- Dunkl–Opdam elements ----------------------------------------------------------------------
def half(alg: RestrictedAlgebra) -> FieldElement:
    return alg.ctx.element(2) ** -1


def _kappa_sum(alg: RestrictedAlgebra, i: int, others) -> np.ndarray:
    """``kappa * sum_{j in others} sum_l s_ij g_i^l g_j^{-l}``."""
    G = alg.G
    terms: dict[int, int] = {}
    for j in others:
        for l in range(alg.m):
            w = G.word(G.s(i, j), G.g(i, l), G.g(j, -l))
            terms[w] = alg.ctx.add(terms.get(w, 0), alg.ps.kappa.code)
    return alg.group_sum(terms)


def _c_sum(alg: RestrictedAlgebra, i: int, twist: bool) -> np.ndarray:
    """``sum_{l>=1} c_l eta^{-l} g_i^l`` (twist) or ``sum_{l>=1} c_l g_i^l``."""
    G = alg.G
    terms = {}
    for l in range(1, alg.m):
        coeff = alg.ps.c[l - 1] * (G.eta ** (-l) if twist else 1)
        terms[G.g(i, l)] = coeff.code
    return alg.group_sum(terms)


def dunkl_opdam(alg: RestrictedAlgebra, i: int, form: int = 1) -> np.ndarray:
    """The element z_i, from the y x form (1) or the x y form (2)."""
    hf = half(alg)
    if form == 1:
        yx = alg.product(alg.y(i), alg.x(i))
        out = alg.sub(yx, alg.scalar(hf))
        out = alg.add(out, _kappa_sum(alg, i, range(i)))
        return alg.sub(out, _c_sum(alg, i, twist=True))
    xy = alg.product(alg.x(i), alg.y(i))
    out = alg.add(xy, alg.scalar(hf))
    out = alg.sub(out, _kappa_sum(alg, i, range(i + 1, alg.n)))
    return alg.sub(out, _c_sum(alg, i, twist=False))


def euler_element(alg: RestrictedAlgebra) -> np.ndarray:
    """``sum_i z_i - n/2``."""
    out = alg.scale(-alg.n * half(alg), alg.one())
    for i in range(alg.n):
        out = alg.add(out, dunkl_opdam(alg, i))
    return out


def artin_schreier_elt(alg: RestrictedAlgebra, z: np.ndarray) -> np.ndarray:
    return alg.sub(alg.power(z, alg.ctx.p), z)


def central_power_sum(alg: RestrictedAlgebra, r: int, zs: list[np.ndarray] | None = None) -> np.ndarray:
    """``sum_i (z_i^p - z_i)^r``."""
    zs = zs if zs is not None else [dunkl_opdam(alg, i) for i in range(alg.n)]
    out = alg.zero()
    for z in zs:
        out = alg.add(out, alg.power(artin_schreier_elt(alg, z), r))
    return out


@dataclass
class IdentityReport:
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, diff: np.ndarray, strict: bool):
        good = not diff.any()
        self.checks[name] = good
        if strict and not good:
            raise IdentityViolated(name, diff)


def _esym(alg: RestrictedAlgebra, zs: list[np.ndarray], r: int) -> np.ndarray:
    out = alg.zero()
    for S in combinations(range(len(zs)), r):
        out = alg.add(out, alg.mul(*[zs[i] for i in S]) if len(S) > 1 else zs[S[0]])
    return out


def verify_DO_identities(alg: RestrictedAlgebra, strict: bool = True) -> IdentityReport:
    """Check the Dunkl–Opdam identities by explicit multiplication.

    a: the z_i commute; b: [E_r, x_1] = sum x_1 z_{j_2}...z_{j_r}; c: [P_r, x_1] = x_1((z_1+1)^r - z_1^r);
    d: sum_i (z_i^p - z_i)^r commutes with x_1, y_1 and the group generators; e: h^p - h is central.
    Also the two expressions for each z_i agree and [h, x_j] = x_j.
    """
    rep = IdentityReport()
    n = alg.n
    zs = [dunkl_opdam(alg, i, 1) for i in range(n)]
    for i in range(n):
        rep.record(f"z{i + 1}: two forms agree", alg.sub(zs[i], dunkl_opdam(alg, i, 2)), strict)
    for i, j in combinations(range(n), 2):
        rep.record(f"a: [z{i + 1},z{j + 1}] = 0", alg.commutator(zs[i], zs[j]), strict)
    x1 = alg.x(0)
    for r in range(1, min(n, 2) + 1):
        rhs = alg.zero()
        for S in combinations(range(1, n), r - 1):
            rhs = alg.add(rhs, alg.mul(x1, *[zs[j] for j in S]) if S else x1)
        rep.record(f"b: [E_{r},x1]", alg.sub(alg.commutator(_esym(alg, zs, r), x1), rhs), strict)
    one = alg.one()
    for r in (1, 2):
        Pr = alg.zero()
        for z in zs:
            Pr = alg.add(Pr, alg.power(z, r))
        Qr = alg.sub(alg.power(alg.add(zs[0], one), r), alg.power(zs[0], r))
        rep.record(f"c: [P_{r},x1] = x1 Q_{r}", alg.sub(alg.commutator(Pr, x1), alg.product(x1, Qr)), strict)
    gens = [("x1", x1), ("y1", alg.y(0))] + [(f"w{g}", alg.group(g)) for g in alg.G.generators()]
    for r in (1, 2):
        c = central_power_sum(alg, r, zs)
        for name, u in gens:
            rep.record(f"d: [sum AS(z_i)^{r}, {name}] = 0", alg.commutator(c, u), strict)
    h = euler_element(alg)
    for j in range(n):
        rep.record(f"[h,x{j + 1}] = x{j + 1}", alg.sub(alg.commutator(h, alg.x(j)), alg.x(j)), strict)
    hc = artin_schreier_elt(alg, h)
    for name, u in gens + [(f"y{j + 1}", alg.y(j)) for j in range(1, n)] + [(f"x{j + 1}", alg.x(j)) for j in range(1, n)]:
        rep.record(f"e: [h^p-h, {name}] = 0", alg.commutator(hc, u), strict)
    return rep


# --- the polynomials Q_r = (z+1)^r - z^r ------------------------------------------------------
def q_polynomial(r: int) -> LaurentPoly:
    z = LaurentPoly({1: 1})
    return (z + 1) ** r - z**r


def q_recursion_holds(r: int) -> bool:
    """``Q_{r+1} = sum_{i=1}^{r} z^{r-i} Q_i + (r+1) z^r`` in Z[z]."""
    rhs = LaurentPoly({r: r + 1})
    for i in range(1, r + 1):
        rhs = rhs + q_polynomial(i).shift(r - i)
    return q_polynomial(r + 1) == rhs


# --- central characters of the power sums ---------------------------------------------------
def power_sum_eigenvalues(alg: RestrictedAlgebra, r: int) -> dict[str, FieldElement]:
    """Eigenvalue of ``sum_i (z_i^p - z_i)^r`` on each baby Verma module."""
    c = central_power_sum(alg, r)
    out = {}
    for lam in linear_characters(alg):
        out[str(lam.label)] = central_character(alg, baby_verma(alg, lam), c)
    return out


__all__ = [
    "BlockReport",
    "CentreData",
    "IdentityReport",
    "LinearCharacter",
    "ModuleOnBasis",
    "block_decomposition",
    "central_power_sum",
    "centre_basis",
    "centre_data",
    "dunkl_opdam",
    "euler_element",
    "jacobson_radical",
    "power_sum_eigenvalues",
    "q_polynomial",
    "q_recursion_holds",
    "simple_head_dims",
    "simple_heads",
    "verify_DO_identities",
]
