import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blowup.algebra import PolyRing
from blowup.groebner import QuotientRing
from blowup.invariants import (
    Analysis,
    NotCohenMacaulay,
    ReductionError,
    filter_regular_check,
    find_reduction,
    height,
    is_cohen_macaulay,
    reduction_number,
    vv_condition,
)

from conftest import deviation_one_example, equimultiple_example, maximal


def plane():
    S = PolyRing(["x", "y"])
    return QuotientRing(S, [])


def test_height_and_spread_of_maximal_ideal():
    R = plane()
    assert height(R, R.ideal(["x", "y"])) == 2
    assert maximal(2).ell == 2


def test_height_refused_on_non_cm_ring():
    S = PolyRing(["x", "y", "z", "w"])
    # two planes meeting in a point
    R = QuotientRing(S, [S("x*z"), S("x*w"), S("y*z"), S("y*w")])
    assert not is_cohen_macaulay(R)
    with pytest.raises(NotCohenMacaulay):
        height(R, R.ideal(["x"]))
    with pytest.raises(ValueError):
        height(plane(), plane().ideal([1]))


def test_example_spreads():
    an = equimultiple_example(2)
    assert (an.height, an.ell) == (1, 1)
    an = deviation_one_example(2)
    assert (an.height, an.ell) == (1, 2)


def test_reduction_numbers():
    R = plane()
    I = R.ideal(["x", "y"])
    assert reduction_number(R, I, [R.ambient("x"), R.ambient("y")]) == 0
    assert equimultiple_example(2).reduction.r_J == 2
    assert equimultiple_example(3).reduction.r_J == 2
    assert deviation_one_example(2).reduction.r_J == 3


def test_user_reduction_must_lie_in_I():
    R = plane()
    with pytest.raises(ReductionError):
        find_reduction(R, R.ideal(["x"]), 1, J_gens=["y"])


def test_too_small_reduction_is_refused():
    R = plane()
    with pytest.raises(ReductionError):
        find_reduction(R, R.ideal(["x", "y"]), 1, ell=2)


def test_generic_reduction_number_is_seed_independent():
    S = PolyRing(["a", "b", "c"])
    R = QuotientRing(S, [])
    I = R.ideal(["a^2", "a*b", "b^2", "b*c"])
    ell = Analysis(R, list(I.gens)).ell
    rs = {find_reduction(R, I, ell, seed=s).r_J for s in range(3)}
    assert len(rs) == 1


def test_valabrega_valla_on_examples():
    an = equimultiple_example(2)
    I = an.R.ideal(["x*y", "t1"])
    vv = vv_condition(an.R, I, an.S("t1"), 2)
    assert vv["holds"] and vv["x_regular"]
    an = deviation_one_example(2)
    I = an.R.ideal(["x*y", "z", "t1"])
    assert vv_condition(an.R, I, an.S("t1"), an.regularity.value + 2)["holds"]
    R = plane()
    assert vv_condition(R, R.ideal(["x", "y"]), R.ambient("x"), 1)["per_j"][1]


def test_depth_G_and_grade():
    assert (maximal(2).depth_G, maximal(2).grade_Gplus) == (2, 2)
    assert (equimultiple_example(2).depth_G, equimultiple_example(2).grade_Gplus) == (2, 1)
    assert (deviation_one_example(2).depth_G, deviation_one_example(2).grade_Gplus) == (3, 1)


def test_regularity_values():
    for d in (1, 2, 3):
        reg = maximal(d).regularity
        assert (reg.value, reg.status, reg.stabilized_at) == (0, "exact", 1)
    assert equimultiple_example(2).regularity.value == 2
    assert deviation_one_example(2).regularity.value == 3


def test_filter_regular_basis_exists_for_equimultiple_example():
    fr = filter_regular_check(equimultiple_example(2))
    assert fr.passed
    assert all(fr.condition1.values()) and all(fr.condition2.values())


def test_nonzerodivisor_single_element_passes():
    S = PolyRing(["x", "y"])
    an = Analysis(QuotientRing(S, []), ["x"])
    assert filter_regular_check(an).passed


def test_report_invariants_hold_on_examples():
    for an in (equimultiple_example(2), deviation_one_example(2), maximal(3)):
        assert an.report().check_invariants() == []


@given(st.integers(0, 10**6))
def test_report_invariants_on_random_monomial_ideals(seed):
    rng = random.Random(seed)
    S = PolyRing(["a", "b", "c"])
    d = rng.randint(1, 2)
    mons = rng.sample(list(S.monomials_of_degree(d)), rng.randint(1, 3))
    an = Analysis(QuotientRing(S, []), [S.monomial(m) for m in mons], seed=seed)
    rep = an.report()
    assert rep.check_invariants() == []
    assert rep.g <= rep.l <= rep.dim_R
    assert rep.grade_Gplus <= rep.depth_G
    if rep.regularity.status == "exact":
        assert rep.regularity.value >= rep.reduction.r_J
