from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cherednik.combinatorics import (
    Multipartition,
    contents,
    dim_sn,
    enumerate_multipartitions,
    parse_multipartition,
    partitions,
    shifted_residue,
    transpose,
)
from cherednik.errors import CtxMismatch, ParseError
from cherednik.gf import artin_schreier, ctx_create

MP = parse_multipartition


def test_enumeration_examples():
    assert [str(x) for x in enumerate_multipartitions(1, 2)] == ["[2]", "[1,1]"]
    assert [str(x) for x in enumerate_multipartitions(2, 2)] == ["[2|]", "[1,1|]", "[1|1]", "[|2]", "[|1,1]"]
    assert [str(x) for x in enumerate_multipartitions(2, 0)] == ["[|]"]


@pytest.mark.parametrize("m,n,count", [(1, 5, 7), (2, 3, 10), (3, 2, 9), (4, 3, 40), (2, 4, 20)])
def test_enumeration_counts(m, n, count):
    mps = enumerate_multipartitions(m, n)
    assert len(mps) == count == len(set(mps))
    assert all(x.size == n and x.m == m for x in mps)


def test_contents_examples():
    assert Counter(contents((2, 1))) == Counter([0, 1, -1])
    assert sorted(contents((4,))) == [0, 1, 2, 3]
    assert contents(()) == []


def test_transpose_examples():
    assert transpose((3,)) == (1, 1, 1)
    assert transpose((2, 1)) == (2, 1)
    assert transpose(()) == ()


@given(st.integers(0, 12), st.data())
def test_transpose_is_involution_and_negates_contents(n, data):
    lam = data.draw(st.sampled_from(partitions(n)))
    assert transpose(transpose(lam)) == lam
    assert Counter(contents(transpose(lam))) == Counter(-c for c in contents(lam))
    assert dim_sn(lam) == dim_sn(transpose(lam))


def test_sn_dimensions_square_sum():
    from math import factorial

    for n in range(1, 8):
        assert sum(dim_sn(l) ** 2 for l in partitions(n)) == factorial(n)


def test_parse_roundtrip_and_errors():
    x = MP("[2,1|1|]")
    assert x.components == ((2, 1), (1,), ())
    assert str(x) == "[2,1|1|]"
    for bad in ("[1,2|]", "2,1|1", "[a|]", "[0|1]"):
        with pytest.raises(ParseError):
            MP(bad)


def test_residue_examples(F9):
    s = artin_schreier(F9.gen)
    res = shifted_residue(MP("[2]"), [F9.zero], F9.gen)
    assert sorted(res.items()) == sorted([(F9.zero, 1), (-s, 1)])
    res = shifted_residue(MP("[2,1]"), [F9.zero], F9(2))
    assert res.items() == [(F9.zero, 3)]
    a = [F9.zero, F9.gen]
    assert shifted_residue(MP("[1|]"), a, F9.zero).items() == [(F9.zero, 1)]
    assert shifted_residue(MP("[|1]"), a, F9.zero).items() == [(artin_schreier(F9.gen), 1)]


def test_residue_ctx_mismatch(F9, F49):
    with pytest.raises(CtxMismatch):
        shifted_residue(MP("[1|]"), [F9.zero, F49.zero], F9.zero)


@given(st.integers(1, 3), st.integers(0, 4), st.data())
def test_residue_total_and_prime_kappa(m, n, data):
    F = ctx_create(5, 2)
    lam = data.draw(st.sampled_from(enumerate_multipartitions(m, n)))
    a = [F.from_code(data.draw(st.integers(0, 24))) for _ in range(m)]
    kappa = F.from_code(data.draw(st.integers(0, 24)))
    assert shifted_residue(lam, a, kappa).total == n
    # for kappa in F_p only the component sizes matter
    kp = F(data.draw(st.integers(0, 4)))
    same_sizes = [mu for mu in enumerate_multipartitions(m, n) if mu.sizes == lam.sizes]
    ref = shifted_residue(lam, a, kp)
    assert all(shifted_residue(mu, a, kp) == ref for mu in same_sizes)


def test_power_sum(F9):
    res = shifted_residue(MP("[2]"), [F9.zero], F9.gen)
    # residues {0, -t}; second power sum t^2 = -1
    assert res.power_sum(1) == -F9.gen
    assert res.power_sum(2) == F9(-1)
