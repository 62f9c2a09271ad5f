import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stanleydepth.monomial import (
    Monomial,
    MonomialIdeal,
    ParseError,
    colon,
    colon_maximal,
    contains,
    gcd_part,
    intersect,
    is_saturated,
    lattice_ops,
    minimalize,
    parse_ideal,
    parse_monomial,
    power,
    restrict,
    saturate,
    slice_ideal,
    stats,
)

EX = "n=3; x1^3, x2^2*x3^2, x1*x2^3*x3"


def I(text):
    return parse_ideal(text)


def m(text, n=3):
    return parse_monomial(text, n)


def box(n, top):
    return itertools.product(range(top + 1), repeat=n)


# --- monomials ---------------------------------------------------------------

@pytest.mark.parametrize(
    "u, w, g, l, div",
    [
        ("x1^2", "x1*x2", "x1", "x1^2*x2", False),
        ("1", "x1^3", "1", "x1^3", True),
        ("x2^2", "x1^3", "1", "x1^3*x2^2", False),
    ],
)
def test_lattice_ops(u, w, g, l, div):
    ops = lattice_ops(m(u, 2), m(w, 2))
    assert ops.gcd == m(g, 2)
    assert ops.lcm == m(l, 2)
    assert ops.u_divides_w is div


def test_lattice_ops_dimension_mismatch():
    with pytest.raises(ValueError):
        lattice_ops(Monomial((1, 0)), Monomial((1, 0, 0)))


def test_monomial_validation():
    with pytest.raises(ValueError):
        Monomial((-1, 0))
    with pytest.raises(ValueError):
        Monomial((2**31, 0))
    with pytest.raises(ValueError):
        Monomial(())


def test_monomial_arithmetic():
    u, w = Monomial((1, 2)), Monomial((0, 1))
    assert u * w == Monomial((1, 3))
    assert u / w == Monomial((1, 1))
    with pytest.raises(ValueError):
        w / u
    assert str(u) == "x1*x2^2"
    assert Monomial.one(3).is_one()


# --- ideals ------------------------------------------------------------------

def test_minimalize_examples():
    assert minimalize([(1, 0), (1, 1)], 2).gens == (Monomial((1, 0)),)
    assert minimalize([(3, 0), (0, 2), (1, 3)], 2).gens == (Monomial((3, 0)), Monomial((0, 2)))
    assert minimalize([], 2).is_zero()


@given(st.lists(st.tuples(*[st.integers(0, 3)] * 3), max_size=6), st.randoms())
def test_minimalize_idempotent_and_order_free(gens, rnd):
    a = minimalize(gens, 3)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert minimalize(shuffled, 3) == a
    assert minimalize(a.gens, 3) == a


def test_contains_examples():
    ex = I(EX)
    assert contains(ex, m("x1^3*x2"))
    assert not contains(ex, m("x1*x2^2*x3"))
    assert not contains(ex, Monomial.one(3))
    assert contains(MonomialIdeal.unit(3), Monomial.one(3))


def test_colon_examples():
    ex = I(EX)
    assert colon(ex, m("x2^2")) == I("n=3; x1^3, x3^2, x1*x2*x3")
    assert colon(I("n=3; x1^3, x3^2, x1*x2*x3"), m("x1")) == I("n=3; x1^2, x3^2, x2*x3")
    assert colon(ex, Monomial.one(3)) == ex


def test_intersect_examples():
    assert intersect(I("n=3; x1"), I("n=3; x2, x3")) == I("n=3; x1*x2, x1*x3")
    assert intersect(I("n=2; x2^2"), I("n=2; x1^3")) == I("n=2; x1^3*x2^2")
    assert intersect(I(EX), MonomialIdeal.unit(3)) == I(EX)


def test_colon_maximal_examples():
    assert colon_maximal(I("n=2; x1^2, x1*x2")) == I("n=2; x1")
    assert colon_maximal(I("n=2; x1, x2")).is_unit()
    assert colon_maximal(I("n=2; x1")) == I("n=2; x1")


def test_saturate_examples():
    s = saturate(I("n=2; x1^2, x1*x2"))
    assert s.sat == I("n=2; x1") and not s.already_saturated
    assert saturate(I("n=3; x1*x2, x1*x3, x2*x3")).already_saturated
    assert is_saturated(I("n=3; x1"))


def test_gcd_part_examples():
    v, rest = gcd_part(I("n=3; x1*x2, x1*x3"))
    assert v == m("x1") and rest == I("n=3; x2, x3")
    v, rest = gcd_part(I(EX))
    assert v.is_one() and rest == I(EX)
    v, rest = gcd_part(I("n=2; x1^2*x2"))
    assert v == m("x1^2*x2", 2) and rest.is_unit()
    with pytest.raises(ValueError):
        gcd_part(MonomialIdeal.zero(2))


def test_stats_examples():
    s = stats(I(EX))
    assert (s.g, s.c, s.degs, s.is_complete_intersection) == (3, 3, (3, 3, 2), False)
    s = stats(I("n=3; x1^2, x2^3, x3"))
    assert s.is_complete_intersection and s.pure_power_vars == frozenset({0, 1, 2})
    s = stats(I("n=3; x1*x2, x1*x3"))
    assert (s.g, s.c) == (2, 2)


def test_restrict_examples():
    assert restrict(I("n=3; x1*x2, x1*x3, x2*x3"), [0, 1]) == I("n=2; x1*x2")
    assert restrict(I("n=2; x1*x2"), [1]).is_zero()


def test_slice_examples():
    ex = I(EX)
    assert slice_ideal(ex, 2, 0) == I("n=2; x1^3")
    assert slice_ideal(ex, 2, 1) == I("n=2; x1^3, x1*x2^3")
    assert slice_ideal(ex, 2, 2) == I("n=2; x1^3, x2^2")
    assert slice_ideal(I("n=2; x1, x2"), 1, 0) == I("n=1; x1")
    assert slice_ideal(I("n=2; x1, x2"), 1, 1).is_unit()
    assert all(slice_ideal(ex, 2, j).g < ex.g for j in (0, 1))


def test_power_examples():
    assert power(I("n=2; x1, x2"), 2) == I("n=2; x1^2, x1*x2, x2^2")
    assert power(I(EX), 1) == I(EX)
    assert power(I("n=2; x1^2, x1*x2"), 2) == I("n=2; x1^4, x1^3*x2, x1^2*x2^2")


# --- invariants on boxes -----------------------------------------------------

ideal_st = st.lists(st.tuples(*[st.integers(0, 3)] * 3), min_size=1, max_size=4).map(lambda g: minimalize(g, 3))
mono_st = st.tuples(*[st.integers(0, 2)] * 3).map(Monomial)


@settings(max_examples=60)
@given(ideal_st, mono_st)
def test_colon_adjunction(ideal, v):
    q = colon(ideal, v)
    for w in box(3, 4):
        assert contains(q, w) == contains(ideal, v * Monomial(w))


@settings(max_examples=60)
@given(ideal_st, ideal_st)
def test_intersect_soundness(a, b):
    both = intersect(a, b)
    for w in box(3, 4):
        assert contains(both, w) == (contains(a, w) and contains(b, w))


@settings(max_examples=60)
@given(ideal_st, mono_st)
def test_saturation_laws(ideal, v):
    s = saturate(ideal).sat
    assert saturate(s).already_saturated
    assert all(contains(s, g) for g in ideal.gens)
    # saturation commutes with the principal factor
    reduced = gcd_part(ideal).I_prime
    assert gcd_part(saturate(reduced.times(v)).sat).v == v


@settings(max_examples=60)
@given(ideal_st)
def test_restrict_and_slice_membership(ideal):
    sub = restrict(ideal, [0, 2])
    for a, c in box(2, 4):
        assert contains(sub, (a, c)) == contains(ideal, (a, 0, c))
    for j in range(ideal.degs()[1] + 1):
        sl = slice_ideal(ideal, 1, j)
        for a, c in box(2, 4):
            assert contains(sl, (a, c)) == contains(ideal, (a, j, c))


# --- text form ---------------------------------------------------------------

def test_parse_canonical_and_idempotent():
    a = parse_ideal("n=3; x1*x2^3*x3, x2^2*x3^2, x1^3")
    assert a.to_text() == "n=3; x1^3, x1*x2^3*x3, x2^2*x3^2"
    assert parse_ideal(a.to_text()) == a
    assert parse_ideal("x1, x3").n == 3


def test_parse_special_ideals():
    assert parse_ideal("n=2; 0").is_zero()
    assert parse_ideal("n=2; ").is_zero()
    assert parse_ideal("n=2; 1").is_unit()
    assert parse_ideal("n=2; 0").to_text() == "n=2; 0"


@pytest.mark.parametrize("text, column", [("n=2; x1^", 9), ("n=2; x3", 6), ("n=2; x1 x2", 9), ("n=2; y1", 6)])
def test_parse_errors_report_position(text, column):
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    assert info.value.line == 1
    assert info.value.column == column


def test_parse_rejects_huge_exponent():
    with pytest.raises(ValueError):
        parse_ideal("n=1; x1^4294967296")
