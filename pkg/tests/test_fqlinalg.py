import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cherednik import fqlinalg as fl
from cherednik.gf import ctx_create


def _slow_matmul(ctx, A, B):
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            acc = ctx.zero
            for k in range(A.shape[1]):
                acc = acc + ctx.from_code(int(A[i, k])) * ctx.from_code(int(B[k, j]))
            out[i, j] = acc.code
    return out


@pytest.mark.parametrize("p,r", [(5, 1), (3, 2), (7, 2), (3, 4), (5, 3)])
def test_matmul_matches_scalar_arithmetic(p, r):
    ctx = ctx_create(p, r)
    rng = np.random.default_rng(p * 10 + r)
    A = rng.integers(0, ctx.q, (6, 5))
    B = rng.integers(0, ctx.q, (5, 4))
    assert np.array_equal(fl.matmul(ctx, A, B), _slow_matmul(ctx, A, B))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2**31))
def test_inverse_and_nullspace(n, seed):
    ctx = ctx_create(3, 2)
    rng = np.random.default_rng(seed)
    A = rng.integers(0, 9, (n, n))
    N = fl.nullspace(ctx, A)
    assert fl.rank(ctx, A) + len(N) == n
    for v in N:
        assert not fl.matvec(ctx, A, v).any()
    if len(N) == 0:
        Ainv = fl.inverse(ctx, A)
        assert np.array_equal(fl.matmul(ctx, A, Ainv), fl.identity(n))


def test_solve_left():
    ctx = ctx_create(7, 2)
    rng = np.random.default_rng(1)
    B = rng.integers(0, 49, (3, 6))
    X = rng.integers(0, 49, (2, 3))
    V = fl.matmul(ctx, X, B)
    Y = fl.solve_left(ctx, B, V)
    assert np.array_equal(fl.matmul(ctx, Y, B), V)
    assert fl.solve_left(ctx, B[:1], V) is None or fl.rank(ctx, np.vstack([B[:1], V])) == 1


def test_kron_and_matpow():
    ctx = ctx_create(3, 2)
    A = np.array([[1, 3], [0, 2]])
    I2 = fl.identity(2)
    K = fl.kron(ctx, A, I2)
    assert K.shape == (4, 4)
    assert np.array_equal(fl.matpow(ctx, K, 3), fl.kron(ctx, fl.matpow(ctx, A, 3), I2))
