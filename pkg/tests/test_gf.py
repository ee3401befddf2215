import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cherednik.errors import CtxMismatch, NonPrime, OrderNotDividing, ParseError, ReducibleModulus
from cherednik.gf import (
    artin_schreier,
    ctx_create,
    in_prime_subfield,
    is_irreducible,
    min_extension_degree,
    multiplicative_order,
    parse_poly,
    primitive_root_of_unity,
    smallest_irreducible,
)

FIELDS = [(3, 1), (3, 2), (5, 1), (5, 2), (7, 2), (3, 4), (5, 3)]


def test_default_moduli():
    assert ctx_create(3, 2).modulus_str == "t^2+1"
    assert ctx_create(7, 2).modulus_str == "t^2+1"
    assert ctx_create(3, 4).modulus_str == "t^4+t+2"
    assert ctx_create(5, 1).modulus_str == "t"


def test_contexts_are_interned():
    assert ctx_create(3, 2) is ctx_create(3, 2)
    assert ctx_create(3, 2, "t^2+1") is ctx_create(3, 2)


def test_bad_inputs():
    with pytest.raises(NonPrime):
        ctx_create(9)
    with pytest.raises(ReducibleModulus):
        ctx_create(3, 2, "t^2-1")
    with pytest.raises(ParseError):
        ctx_create(3, 2).parse("2*")
    with pytest.raises(ParseError):
        ctx_create(3, 2).parse("s+1")
    with pytest.raises(ParseError):
        ctx_create(3).parse("t")


def test_parse_poly():
    assert parse_poly("2*t+1", 5) == [1, 2]
    assert parse_poly("t^2-1", 5) == [4, 0, 1]
    assert parse_poly("-t", 3) == [0, 2]
    assert parse_poly("3", 3) == [0]


def test_artin_schreier_kernel_is_prime_field(F9):
    kernel = [a for a in F9.elements() if artin_schreier(a) == F9.zero]
    assert kernel == F9.prime_subfield()
    assert str(artin_schreier(F9.gen)) == "t"


def test_in_prime_subfield(F81):
    assert sum(in_prime_subfield(a) for a in F81.elements()) == 3


@pytest.mark.parametrize("p,r", FIELDS)
def test_multiplicative_generator(p, r):
    ctx = ctx_create(p, r)
    g = ctx.multiplicative_generator
    assert multiplicative_order(g) == ctx.q - 1


@pytest.mark.parametrize("p,m", [(3, 2), (3, 4), (5, 3), (7, 3), (5, 12), (7, 16)])
def test_roots_of_unity(p, m):
    r = min_extension_degree(p, m)
    ctx = ctx_create(p, r)
    eta = primitive_root_of_unity(ctx, m)
    assert multiplicative_order(eta) == m
    if r > 1:
        with pytest.raises(OrderNotDividing):
            primitive_root_of_unity(ctx_create(p, r - 1), m)


def test_smallest_irreducible_is_irreducible():
    for p in (2, 3, 5):
        for r in (1, 2, 3, 4):
            f = smallest_irreducible(p, r)
            assert len(f) == r + 1 and f[-1] == 1
            assert is_irreducible(list(f), p)


def test_mixing_fields_raises(F9, F49):
    with pytest.raises(CtxMismatch):
        F9.gen + F49.gen


def _elements(p, r):
    q = p**r
    return st.tuples(st.integers(0, q - 1), st.integers(0, q - 1), st.integers(0, q - 1))


@pytest.mark.parametrize("p,r", FIELDS)
def test_field_axioms(p, r):
    ctx = ctx_create(p, r)

    @settings(max_examples=60, deadline=None)
    @given(_elements(p, r))
    def check(codes):
        a, b, c = (ctx.from_code(x) for x in codes)
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a - a == ctx.zero
        if b != ctx.zero:
            assert (a / b) * b == a
        # Frobenius is additive and AS is F_p-linear
        assert (a + b) ** p == a**p + b**p
        assert artin_schreier(a + b) == artin_schreier(a) + artin_schreier(b)
        assert artin_schreier(a * 2) == artin_schreier(a) * 2

    check()


@given(st.integers(0, 80))
def test_code_roundtrip(code):
    F = ctx_create(3, 4)
    a = F.from_code(code)
    assert F.parse(str(a)) == a
    assert F.encode(a.coeffs) == code
