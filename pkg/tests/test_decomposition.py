import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stanleydepth.decomposition import (
    Slab,
    StanleyDecomposition,
    coverage_bounds,
    parse_decomposition,
    parse_slab,
    sdepth_of,
    slab_member,
    slabs_disjoint,
    verify,
)
from stanleydepth.monomial import Monomial, MonomialIdeal, ParseError, parse_ideal


def S(text, n=3):
    return parse_slab(text, n)


def test_slab_member_examples():
    s = S("x1^3 K[x1,x3]")
    assert slab_member(s, (4, 0, 1))
    assert not slab_member(s, (3, 1, 0))
    full = S("1 K[x1,x2,x3]")
    assert all(slab_member(full, u) for u in itertools.product(range(3), repeat=3))


def test_slabs_disjoint_examples():
    assert slabs_disjoint(S("x1 K[x1]", 2), S("x2 K[x2]", 2))
    assert not slabs_disjoint(S("1 K[x1,x2]", 2), S("x1 K[x1]", 2))
    assert slabs_disjoint(S("x1^3 K[x1,x3]"), S("x1^3*x2 K[x1,x3]"))


slab_st = st.builds(
    Slab,
    st.tuples(*[st.integers(0, 2)] * 3).map(Monomial),
    st.frozensets(st.integers(0, 2)),
)


@settings(max_examples=200)
@given(slab_st, slab_st)
def test_disjointness_matches_brute_force(a, b):
    assert slabs_disjoint(a, b) == slabs_disjoint(b, a)
    shared = any(a.contains(u) and b.contains(u) for u in itertools.product(range(5), repeat=3))
    assert slabs_disjoint(a, b) == (not shared)


@settings(max_examples=100)
@given(slab_st)
def test_slab_member_coordinate_rule(s):
    for u in itertools.product(range(4), repeat=3):
        rule = all((u[j] >= s.origin[j]) if j in s.free_vars else (u[j] == s.origin[j]) for j in range(3))
        assert slab_member(s, u) == rule


def test_sdepth_of():
    ex = parse_ideal("n=3; x1^3, x2^2*x3^2, x1*x2^3*x3")
    assert sdepth_of(StanleyDecomposition("ideal", ex, (S("1 K[x1,x2,x3]"),))) == 3
    dims = (S("1 K[x1,x2]"), S("x3 K[x1,x2,x3]"), S("x1 K[x2,x3]"))
    assert sdepth_of(StanleyDecomposition("ideal", ex, dims)) == 2
    assert sdepth_of(StanleyDecomposition("quotient", MonomialIdeal.unit(3), ())) == 3
    with pytest.raises(ValueError):
        sdepth_of(StanleyDecomposition("ideal", ex, ()))


def test_verify_examples():
    d = StanleyDecomposition("quotient", parse_ideal("n=2; x1"), (S("1 K[x2]", 2),))
    rep = verify(d)
    assert rep.valid and rep.sdepth == 1

    ideal = parse_ideal("n=2; x1, x2")
    good = StanleyDecomposition("ideal", ideal, (S("x1 K[x1,x2]", 2), S("x2 K[x2]", 2)))
    assert verify(good).valid and verify(good).sdepth == 1
    bad = StanleyDecomposition("ideal", ideal, (S("x1 K[x1,x2]", 2),))
    rep = verify(bad)
    assert not rep.valid and rep.violation == Monomial((0, 1))
    assert rep.reason == "monomial of the target not covered"


def test_verify_detects_overlap_and_stray():
    ideal = parse_ideal("n=2; x1")
    overlap = StanleyDecomposition("ideal", ideal, (S("x1 K[x1,x2]", 2), S("x1*x2 K[x2]", 2)))
    rep = verify(overlap)
    assert not rep.valid and rep.reason == "overlapping slabs"
    stray = StanleyDecomposition("quotient", ideal, (S("1 K[x1,x2]", 2),))
    rep = verify(stray)
    assert not rep.valid and rep.violation == Monomial((1, 0))
    assert rep.reason == "slab contains a monomial outside the target"


def test_verify_all_violations():
    ideal = parse_ideal("n=2; x1, x2")
    d = StanleyDecomposition("ideal", ideal, ())
    assert len(verify(d, all_violations=True).violations) > 1


def test_zero_module():
    rep = verify(StanleyDecomposition("ideal", MonomialIdeal.zero(2), ()))
    assert rep.valid and rep.zero_module and rep.sdepth == 2


def test_coverage_bounds():
    d = StanleyDecomposition("ideal", parse_ideal("n=2; x1^2, x2"), (S("x1^3 K[x1]", 2),))
    assert coverage_bounds(d) == (4, 2)


def _random_decomposition(rng):
    """A valid decomposition of S/I from a random order of singletons and free rays."""
    n = rng.randint(1, 3)
    ideal = parse_ideal(f"n={n}; " + ", ".join(f"x{j + 1}^{rng.randint(1, 2)}" for j in range(n)))
    pts = list(itertools.product(*(range(g) for g in ideal.degs())))
    return StanleyDecomposition("quotient", ideal, tuple(Slab(Monomial(p), frozenset()) for p in pts))


def test_verify_sound_against_sampling():
    rng = random.Random(7)
    for _ in range(20):
        d = _random_decomposition(rng)
        assert verify(d).valid
        top = [b + 3 for b in coverage_bounds(d)]
        for _ in range(1000):
            u = tuple(rng.randint(0, t) for t in top)
            hits = sum(s.contains(u) for s in d.slabs)
            assert hits == (0 if d.ideal.contains(u) else 1)


# --- text form ---------------------------------------------------------------

def test_round_trip_text():
    d = StanleyDecomposition("ideal", parse_ideal("n=2; x1, x2"), (S("x1 K[x1,x2]", 2), S("x2 K[x2]", 2)))
    text = d.to_text()
    assert text.startswith("target: ideal; ideal: x1, x2; n: 2\n")
    assert parse_decomposition(text) == d


def test_parse_comments_and_empty_free_set():
    d = parse_decomposition("# comment\ntarget: quotient; ideal: x1, x2; n: 2\n\n1 K[]  # only point\n")
    assert d.slabs == (Slab(Monomial((0, 0)), frozenset()),)
    assert parse_slab("1 K[∅]", 2).free_vars == frozenset()


@pytest.mark.parametrize(
    "text, line",
    [
        ("target: ideal; ideal: x1; n: 1\nx1 K[x2]\n", 2),
        ("target: idea; ideal: x1; n: 1\n", 1),
        ("target: ideal; ideal: x1; n: 1\nx1 K[x1\n", 2),
        ("x1 K[x1]\n", 1),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_decomposition(text)
    assert info.value.line == line
