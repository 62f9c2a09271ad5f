import pytest

from stanleydepth.decomposition import verify
from stanleydepth.harness import draw_instance, obs34_ideal
from stanleydepth.monomial import MonomialIdeal, parse_ideal, power
from stanleydepth.oracles import (
    BudgetExceeded,
    betti_numbers,
    char_poset,
    depth_exact,
    depth_zero,
    partition_to_decomposition,
    projective_dimension,
    reduced_homology_ranks,
    sdepth_at_least,
    sdepth_exact,
    upper_koszul_complex,
)


@pytest.mark.parametrize(
    "target, text, value",
    [
        ("ideal", "n=3; x1, x2, x3", 2),
        ("quotient", "n=2; x1^2, x1*x2", 0),
        ("quotient", "n=3; x1*x2, x2*x3, x1*x3", 1),
        ("ideal", "n=3; x1^3, x2^2*x3^2, x1*x2^3*x3", 2),
        ("ideal", "n=2; x1^2*x2", 2),
        ("quotient", "n=3; x1^2*x2", 2),
        ("ideal", "n=1; x1^3", 1),
        ("quotient", "n=1; x1^3", 0),
    ],
)
def test_sdepth_examples(target, text, value):
    res = sdepth_exact(target, parse_ideal(text))
    assert res.value == value
    d = partition_to_decomposition(target, parse_ideal(text), res.witness)
    rep = verify(d)
    assert rep.valid and rep.sdepth == value


def test_sdepth_result_unpacks():
    value, witness = sdepth_exact("ideal", parse_ideal("n=2; x1, x2"))
    assert value == 1 and witness.value() == 1


def test_zero_modules():
    assert sdepth_exact("ideal", MonomialIdeal.zero(3)).value == 3
    assert sdepth_exact("quotient", MonomialIdeal.unit(3)).value == 3
    assert sdepth_exact("ideal", MonomialIdeal.unit(2)).value == 2
    assert sdepth_exact("quotient", MonomialIdeal.zero(2)).value == 2


def test_sdepth_at_least_matches_exact():
    for i in range(40):
        ideal = draw_instance("thm21", 4, i, {"n": (1, 3), "max_degree": 2, "g": (1, 3)})
        for target in ("ideal", "quotient"):
            value = sdepth_exact(target, ideal).value
            assert sdepth_at_least(target, ideal, value)
            assert not sdepth_at_least(target, ideal, value + 1) or value == ideal.n


def test_char_poset():
    p = char_poset("quotient", parse_ideal("n=2; x1^2, x1*x2"))
    assert sorted(p.points) == [(0, 0), (0, 1), (1, 0)]
    assert len(char_poset("ideal", parse_ideal("n=2; x1^2, x1*x2"))) == 3
    with pytest.raises(ValueError):
        char_poset("ideal", parse_ideal("n=2; x1^2"), cap=(1, 0))
    with pytest.raises(ValueError):
        char_poset("module", parse_ideal("n=2; x1"))


def test_budget_names_its_knob():
    with pytest.raises(BudgetExceeded) as info:
        sdepth_exact("ideal", parse_ideal("n=3; x1^9, x2^9, x3^9"), budget=100)
    assert info.value.knob == "poset_budget"
    assert "poset_budget" in str(info.value)
    with pytest.raises(BudgetExceeded) as info:
        depth_exact(parse_ideal("n=2; x1^3, x1^2*x2, x1*x2^2, x2^3"), budget=2)
    assert info.value.knob == "betti_budget"


def test_depth_zero_examples():
    assert depth_zero(parse_ideal("n=2; x1^2, x1*x2"))
    assert not depth_zero(parse_ideal("n=2; x1"))
    assert not depth_zero(obs34_ideal())


@pytest.mark.parametrize(
    "text, depth",
    [
        ("n=2; x1, x2", 0),
        ("n=3; x1^2, x2, x3^3", 0),
        ("n=3; x1*x2, x2*x3", 1),
        ("n=4; x1*x2", 3),
        ("n=3; x1*x2, x2*x3, x1*x3", 1),
        ("n=2; x1^2, x1*x2", 0),
        ("n=3; 0", 3),
    ],
)
def test_depth_examples(text, depth):
    assert depth_exact(parse_ideal(text)) == depth


def test_depth_of_unit_ideal_is_undefined():
    with pytest.raises(ValueError):
        depth_exact(MonomialIdeal.unit(2))


def test_betti_numbers_of_three_points():
    # S/(x1x2, x2x3, x1x3): beta_0 = 3 generators, beta_1 = 2 syzygies
    b = betti_numbers(parse_ideal("n=3; x1*x2, x2*x3, x1*x3"))
    by_i = {}
    for (i, _), v in b.items():
        by_i[i] = by_i.get(i, 0) + v
    assert by_i == {0: 3, 1: 2}
    assert projective_dimension(parse_ideal("n=3; x1*x2, x2*x3, x1*x3")) == 2


def test_reduced_homology():
    circle = [(), (0,), (1,), (2,), (0, 1), (1, 2), (0, 2)]
    assert reduced_homology_ranks(circle) == {1: 1}
    assert reduced_homology_ranks([(), (0,), (1,)]) == {0: 1}
    assert reduced_homology_ranks([()]) == {-1: 1}
    assert reduced_homology_ranks([(), (0,), (1,), (0, 1)]) == {}


def test_upper_koszul_complex():
    faces = upper_koszul_complex(parse_ideal("n=2; x1, x2"), (1, 1))
    assert sorted(faces) == [(), (0,), (1,)]
    # two points: one syzygy at x1*x2
    assert betti_numbers(parse_ideal("n=2; x1, x2"))[(1, (1, 1))] == 1


def test_auslander_buchsbaum_consistency():
    for text in ("n=3; x1^2*x3", "n=4; x2*x4^3", "n=2; x1"):
        ideal = parse_ideal(text)
        assert depth_exact(ideal) == ideal.n - 1


def test_depth_one_ideal_loses_it_in_the_square():
    # saturated ideal whose square is not: depth 1 for S/I, 0 for S/I^2
    ideal = parse_ideal("n=3; x1^3*x2^3, x1^2*x2^3*x3, x1^2*x2*x3^2")
    assert depth_exact(ideal) == 1 and sdepth_exact("quotient", ideal).value == 1
    sq = power(ideal, 2)
    assert depth_exact(sq) == 0 and sdepth_exact("quotient", sq).value == 0


def test_conjecture_spot_check():
    for i in range(60):
        ideal = draw_instance("thm21", 8, i, {"n": (1, 3), "max_degree": 3, "g": (1, 3)})
        depth = depth_exact(ideal)
        assert sdepth_exact("quotient", ideal).value >= depth
        assert sdepth_exact("ideal", ideal).value >= depth + 1
