"""Dense linear algebra over F_q on arrays of element codes.

Matrices are numpy integer arrays whose entries are the integer codes of
:mod:`cherednik.gf`.  Prime fields use plain modular arithmetic; extension
fields go through the lookup tables of the context (so ``q`` must not exceed
``gf.TABLE_LIMIT``).
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetExceeded
from .gf import FieldCtx


def _tables(ctx: FieldCtx):
    if not ctx.has_tables:
        raise BudgetExceeded(f"linear algebra over F_{ctx.q} needs q <= table limit")
    return ctx.tables


def asarray(A) -> np.ndarray:
    return np.asarray(A, dtype=np.int64)


def zeros(shape) -> np.ndarray:
    return np.zeros(shape, dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def add(ctx: FieldCtx, A, B) -> np.ndarray:
    if ctx.r == 1:
        return (asarray(A) + asarray(B)) % ctx.p
    return _tables(ctx).add[A, B].astype(np.int64)


def sub(ctx: FieldCtx, A, B) -> np.ndarray:
    if ctx.r == 1:
        return (asarray(A) - asarray(B)) % ctx.p
    return _tables(ctx).sub[A, B].astype(np.int64)


def neg(ctx: FieldCtx, A) -> np.ndarray:
    if ctx.r == 1:
        return (-asarray(A)) % ctx.p
    return _tables(ctx).neg[A].astype(np.int64)


def scale(ctx: FieldCtx, c: int, A) -> np.ndarray:
    """Multiply every entry of ``A`` by the scalar code ``c``."""
    if ctx.r == 1:
        return (c * asarray(A)) % ctx.p
    return _tables(ctx).mul[c][A].astype(np.int64)


def hadamard(ctx: FieldCtx, A, B) -> np.ndarray:
    if ctx.r == 1:
        return (asarray(A) * asarray(B)) % ctx.p
    return _tables(ctx).mul[A, B].astype(np.int64)


def kron(ctx: FieldCtx, A, B) -> np.ndarray:
    A, B = asarray(A), asarray(B)
    prod = hadamard(ctx, A[:, None, :, None], B[None, :, None, :])
    return prod.reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])


def to_digits(ctx: FieldCtx, A) -> np.ndarray:
    """Stack of coordinate planes, shape ``(r,) + A.shape``."""
    A = asarray(A)
    if ctx.r == 1:
        return A[None]
    return np.moveaxis(_tables(ctx).digits[A], -1, 0)


def from_digits(ctx: FieldCtx, D) -> np.ndarray:
    D = asarray(D) % ctx.p
    if ctx.r == 1:
        return D[0]
    return np.tensordot(_tables(ctx).weights, D, axes=(0, 0))


def matmul(ctx: FieldCtx, A, B) -> np.ndarray:
    """Exact product over F_q.

    Each coordinate plane product is an integer matrix product done in float64,
    exact as long as the inner dimension times ``(p-1)**2`` stays below 2**53.
    """
    A, B = asarray(A), asarray(B)
    p, r = ctx.p, ctx.r
    inner = A.shape[-1]
    if inner * (p - 1) ** 2 >= 2**52:
        raise BudgetExceeded("inner dimension too large for exact float products")
    if r == 1:
        return np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64) % p
    A2 = A.reshape(-1, inner)
    B2 = B.reshape(inner, -1)
    # all r*r plane products in one BLAS call
    DA = np.ascontiguousarray(to_digits(ctx, A2), dtype=np.float64).reshape(r * A2.shape[0], inner)
    DB = np.ascontiguousarray(np.moveaxis(to_digits(ctx, B2), 0, 1), dtype=np.float64).reshape(inner, r * B2.shape[1])
    P = (np.rint(DA @ DB).astype(np.int64) % p).reshape(r, A2.shape[0], r, B2.shape[1])
    red = _tables(ctx).reduce
    out = np.zeros((r, A2.shape[0], B2.shape[1]), dtype=np.int64)
    for k in range(r):
        for l in range(r):
            for i in range(r):
                if red[k + l, i]:
                    out[i] += red[k + l, i] * P[k, :, l, :]
    shape = A.shape[:-1] + B.shape[1:]
    out = out.reshape((r,) + shape)
    return from_digits(ctx, out)


def matvec(ctx: FieldCtx, A, v) -> np.ndarray:
    return matmul(ctx, A, asarray(v)[:, None])[:, 0]


def rref(ctx: FieldCtx, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = asarray(A).copy()
    rows, cols = M.shape
    pivots: list[int] = []
    p = ctx.p
    tb = None if ctx.r == 1 else _tables(ctx)
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.nonzero(M[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            M[[row, piv]] = M[[piv, row]]
        a = int(M[row, col])
        if tb is None:
            M[row] = M[row] * pow(a, p - 2, p) % p
        else:
            M[row] = tb.mul[int(tb.inv[a])][M[row]]
        others = np.nonzero(M[:, col])[0]
        others = others[others != row]
        if others.size:
            f = M[others, col]
            if tb is None:
                M[others] = (M[others] - f[:, None] * M[row][None, :]) % p
            else:
                M[others] = tb.sub[M[others], tb.mul[f[:, None], M[row][None, :]]]
        pivots.append(col)
        row += 1
    return M, pivots


def rank(ctx: FieldCtx, A) -> int:
    A = asarray(A)
    if A.size == 0:
        return 0
    return len(rref(ctx, A)[1])


def nullspace(ctx: FieldCtx, A) -> np.ndarray:
    """Basis of ``{v : A v = 0}`` as the rows of the returned array."""
    A = asarray(A)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return identity(cols)
    R, pivots = rref(ctx, A)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = zeros((len(free), cols))
    for k, fcol in enumerate(free):
        basis[k, fcol] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = neg(ctx, R[i, fcol])
    return basis


def row_space(ctx: FieldCtx, A) -> np.ndarray:
    """Echelon basis of the row space."""
    A = asarray(A)
    if A.size == 0:
        return zeros((0, A.shape[1] if A.ndim == 2 else 0))
    R, pivots = rref(ctx, A)
    return R[: len(pivots)]


def inverse(ctx: FieldCtx, A) -> np.ndarray:
    A = asarray(A)
    n = A.shape[0]
    R, pivots = rref(ctx, np.hstack([A, identity(n)]))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return R[:, n:]


def solve_left(ctx: FieldCtx, B, V) -> np.ndarray | None:
    """Coordinates ``X`` with ``X @ B = V`` (rows of V in the row span of B), or None."""
    B, V = asarray(B), asarray(V)
    k = B.shape[0]
    aug = np.hstack([B.T, V.T])
    R, pivots = rref(ctx, aug)
    if any(pc >= k for pc in pivots):
        return None
    X = zeros((V.shape[0], k))
    for i, pc in enumerate(pivots):
        X[:, pc] = R[i, k:]
    return X


def matpow(ctx: FieldCtx, A, e: int) -> np.ndarray:
    A = asarray(A)
    result = identity(A.shape[0])
    while e:
        if e & 1:
            result = matmul(ctx, result, A)
        A = matmul(ctx, A, A)
        e >>= 1
    return result
