import random
from itertools import product

import pytest

from cherednik.blocks import ParameterSet, derive_params
from cherednik.errors import BadCharacteristic
from cherednik.gf import artin_schreier, ctx_create, in_prime_subfield, primitive_root_of_unity
from cherednik.smoothness import (
    G4_ROWS,
    ParabolicType,
    euler_scalar_shift,
    g4_d,
    g4_generic_check,
    g4_scalar_table,
    g4_table_separates,
    parabolic_types,
    singular_locus_report,
    smooth_iff_singleton_blocks,
    top_group_singleton,
)


def grid(F, m, n):
    for k in F.elements():
        for c in product(F.elements(), repeat=m - 1):
            yield ParameterSet(m, n, k, c)


def test_parabolic_types_examples():
    assert parabolic_types(3, 1) == [ParabolicType((), 0), ParabolicType((), 1)]
    assert {pt.sym_factors for pt in parabolic_types(1, 3)} == {(), (2,), (3,)}
    assert parabolic_types(2, 2) == [
        ParabolicType((), 0),
        ParabolicType((2,), 0),
        ParabolicType((), 1),
        ParabolicType((), 2),
    ]


def test_parabolic_types_bounded():
    for m, n in [(2, 4), (3, 3), (1, 5)]:
        for pt in parabolic_types(m, n):
            assert sum(pt.sym_factors) + pt.wreath_rank <= n
            assert all(k >= 2 for k in pt.sym_factors)


def test_symmetric_group_hyperplanes(F9):
    for k in F9.elements():
        rep = singular_locus_report(ParameterSet(1, 3 - 1, k))
        assert rep.smooth == (not in_prime_subfield(k))
    assert smooth_iff_singleton_blocks(ParameterSet(1, 2, F9.gen)) == (True, True)
    assert smooth_iff_singleton_blocks(ParameterSet(1, 2, F9(1))) == (False, False)


def test_rank_one_reduces_to_c1(F9):
    for c1 in F9.elements():
        rep = singular_locus_report(ParameterSet(2, 1, F9.gen, (c1,)))
        assert {v.C for v in rep.violations} <= {0}
        assert rep.smooth == (not in_prime_subfield(c1))


def test_violation_json(F9):
    rep = singular_locus_report(ParameterSet(2, 2, F9.gen, (F9.gen + 1,)))
    data = rep.to_json()
    assert data["verdict"] == ("smooth" if rep.smooth else "singular")
    for v in data["violations"]:
        assert set(v) == {"i", "j", "C", "sign"}


@pytest.mark.parametrize("m,n", [(1, 2), (2, 1), (2, 2)])
def test_equivalence_exhaustive_F9(F9, m, n):
    for ps in grid(F9, m, n):
        hyper, parabolic = smooth_iff_singleton_blocks(ps)
        assert hyper == parabolic == top_group_singleton(ps), ps.describe()


def test_equivalence_sampled_F25_rank3():
    F = ctx_create(5, 2)
    rng = random.Random(3)
    for _ in range(40):
        k = F.from_code(rng.randrange(25))
        c = (F.from_code(rng.randrange(25)),)
        ps = ParameterSet(2, 3, k, c)
        hyper, parabolic = smooth_iff_singleton_blocks(ps)
        assert hyper == parabolic == top_group_singleton(ps)


def test_monotonicity(F9):
    for ps in grid(F9, 2, 2):
        smaller = [ParameterSet(2, 1, ps.kappa, ps.c), ParameterSet(1, 2, ps.kappa)]
        if any(not singular_locus_report(s).smooth for s in smaller):
            assert not singular_locus_report(ps).smooth


def test_g4_table_values(F49):
    w = primitive_root_of_unity(F49, 3)
    tab = g4_scalar_table(F49)
    assert tuple(tab) == G4_ROWS
    assert tab["T"] == (F49(4), F49(4))
    assert tab["V1"] == (w * w * 4, w * 4)
    assert tab["h*"] == (w * -2, w * w * -2)
    assert tab["U"] == (F49.zero, F49.zero)
    assert g4_table_separates(F49)


def test_g4_zero_parameters_inconclusive(F49):
    v = g4_generic_check(F49, F49.zero, F49.zero)
    assert v.verdict == "inconclusive" and len(v.unseparated_pairs) == 21


def test_g4_equal_d_cannot_separate_V1_V2(F49):
    # V1 and V2 have the same coordinate sum, so d1 = d2 never separates them
    g = F49.multiplicative_generator
    w = primitive_root_of_unity(F49, 3)
    c1, c2 = -g * (1 - w * w), -g * (1 - w)
    assert g4_d(F49, c1, c2) == (g, g)
    v = g4_generic_check(F49, c1, c2)
    assert ("V1", "V2") in v.unseparated_pairs
    assert v.verdict == "inconclusive"


def test_g4_scaling_invariance(F49):
    rng = random.Random(11)
    for _ in range(30):
        c1, c2 = F49.from_code(rng.randrange(49)), F49.from_code(rng.randrange(49))
        base = g4_generic_check(F49, c1, c2)
        for u in range(1, 7):
            assert g4_generic_check(F49, c1 * u, c2 * u).verdict == base.verdict


def test_g4_rejects_small_characteristic():
    with pytest.raises(BadCharacteristic):
        g4_generic_check(ctx_create(3, 2), ctx_create(3, 2).zero, ctx_create(3, 2).zero)


def test_euler_scalar_shift(F49):
    d = (F49.gen, F49.gen + 3)
    assert euler_scalar_shift([F49.zero, F49.zero], [F49.gen, F49(1)]) == F49.zero
    assert euler_scalar_shift(d, [F49(4), F49(4)]) == artin_schreier(d[0] * 4 + d[1] * 4)
    assert euler_scalar_shift([F49(2), F49(3)], [F49(5), F49(1)]) == F49.zero
