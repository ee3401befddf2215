import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cherednik.blocks import ParameterSet, block_partition, derive_params, residue_of, same_block
from cherednik.combinatorics import enumerate_multipartitions, parse_multipartition
from cherednik.errors import BadParameters, OrderNotDividing, SizeMismatch
from cherednik.gf import ctx_create, in_prime_subfield, primitive_root_of_unity

MP = parse_multipartition


def classes(ps):
    return [[str(x) for x in cl.members] for cl in block_partition(ps).classes]


def test_derive_params_examples(F9):
    assert derive_params(ParameterSet(1, 2, F9.gen)).a == (F9.zero,)
    c1 = F9.gen + 2
    d = derive_params(ParameterSet(2, 1, F9.zero, (c1,)))
    assert d.H == (-c1, c1) and d.a == (F9.zero, c1)
    assert derive_params(ParameterSet(2, 2, F9.gen, (F9.zero,))).a == (F9.zero, F9.zero)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_derived_H_solves_the_system(m):
    F = ctx_create(5, 2) if m != 3 else ctx_create(7, 1)
    eta = primitive_root_of_unity(F, m)
    c = tuple(F.from_code(3 * l + 1) for l in range(1, m))
    H = derive_params(ParameterSet(m, 1, F.zero, c)).H
    assert sum(H, F.zero) == F.zero
    for l in range(1, m):
        lhs = sum((eta ** (-l * j) * H[j] for j in range(m)), F.zero)
        assert lhs == -(c[l - 1] * (1 - eta ** (-l)))


def test_block_examples(F9):
    assert classes(ParameterSet(1, 2, F9(2))) == [["[2]", "[1,1]"]]
    assert classes(ParameterSet(1, 2, F9.gen)) == [["[2]"], ["[1,1]"]]
    F3 = ctx_create(3)
    assert classes(ParameterSet(2, 1, F3.zero, (F3(1),))) == [["[1|]", "[|1]"]]
    for c1 in F9.elements():
        ps = ParameterSet(2, 1, F9.zero, (c1,))
        assert len(block_partition(ps).classes) == (1 if in_prime_subfield(c1) else 2)


def test_n_zero_is_one_empty_class(F9):
    bp = block_partition(ParameterSet(2, 0, F9.gen, (F9.gen,)))
    assert [[str(x) for x in cl.members] for cl in bp.classes] == [["[|]"]]


def test_same_block_examples(F9):
    k = F9.gen
    ps = ParameterSet(1, 2, k)
    assert same_block(MP("[1,1]"), MP("[1,1]"), ps)
    psp = ParameterSet(1, 2, F9(1))
    assert same_block(MP("[2]"), MP("[1,1]"), psp)
    # a_1 = kappa: c_1 = kappa since a = (0, c_1) for m = 2
    ps2 = ParameterSet(2, 2, k, (k,))
    assert not same_block(MP("[2|]"), MP("[|1,1]"), ps2)
    with pytest.raises(SizeMismatch):
        same_block(MP("[2|]"), MP("[1|]"), ps2)


def test_parameter_validation(F9):
    with pytest.raises(BadParameters):
        ParameterSet(2, 1, F9.zero, ())
    with pytest.raises(BadParameters):
        ParameterSet(3, 1, F9.zero, (F9.zero, F9.zero))
    with pytest.raises(BadParameters):
        ParameterSet(1, 3, F9.zero)
    with pytest.raises(OrderNotDividing):
        ParameterSet(5, 1, F9.zero, (F9.zero,) * 4)


def test_json_shape(F9):
    data = block_partition(ParameterSet(1, 2, F9.gen)).to_json()
    assert set(data) >= {"m", "n", "p", "classes", "ctx"}
    assert data["classes"][0]["residue"][0].keys() == {"elt", "mult"}


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 80), st.integers(0, 80), st.integers(0, 80))
def test_partition_is_equivalence_and_field_stable(k, c1, shift):
    F81 = ctx_create(3, 4)
    ps = ParameterSet(2, 2, F81.from_code(k), (F81.from_code(c1),))
    bp = block_partition(ps)
    labels = enumerate_multipartitions(2, 2)
    assert sorted(x for cl in bp.classes for x in cl.members) == sorted(labels)
    for x in labels:
        for y in labels:
            assert same_block(x, y, ps) == (bp.class_of(x) == bp.class_of(y))
    # a global shift of all a_i adds a constant to every residue: same partition
    d = derive_params(ps)
    s = F81.from_code(shift)
    shifted = {x: residue_of(x, ps, type(d)(d.H, tuple(ai + s for ai in d.a))) for x in labels}
    for x in labels:
        for y in labels:
            assert (shifted[x] == shifted[y]) == same_block(x, y, ps)


def test_field_extension_does_not_change_blocks():
    F3, F81 = ctx_create(3), ctx_create(3, 4)
    for k in range(3):
        for c in range(3):
            small = classes(ParameterSet(2, 2, F3(k), (F3(c),)))
            big = classes(ParameterSet(2, 2, F81(k), (F81(c),)))
            assert small == big
