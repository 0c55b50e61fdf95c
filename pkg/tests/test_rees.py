import random

from hypothesis import given
from hypothesis import strategies as st

from blowup.algebra import PolyRing
from blowup.groebner import Ideal, QuotientRing, krull_dimension
from blowup.rees import blowup, fiber_dimension, graded_piece_dims, hilbert_check

from conftest import deviation_one_example, equimultiple_example


def plane():
    S = PolyRing(["x", "y"])
    return QuotientRing(S, [])


def test_principal_nonzerodivisor_has_trivial_rees_ideal():
    R = plane()
    B = blowup(R, [R.ambient("x")])
    assert B.rees_ideal.is_zero()


def test_rees_ideal_of_the_plane_origin():
    R = plane()
    B = blowup(R, [R.ambient("x"), R.ambient("y")])
    A = B.ring
    y1, y2 = B.y(0), B.y(1)
    rel = A.gen("x") * y2 - A.gen("y") * y1
    assert B.rees_ideal == Ideal(A, [rel])
    assert B.substitution_check() and B.is_bihomogeneous()


def test_assoc_graded_of_maximal_ideal_is_polynomial():
    R = plane()
    B = blowup(R, [R.ambient("x"), R.ambient("y")])
    # G = k[y1, y2]: the x's die and nothing else does
    assert krull_dimension(B.g_ideal) == 2
    assert graded_piece_dims(B, 3, [3]) == {3: 4}
    assert fiber_dimension(B) == 2


def test_y_weights_follow_generator_degrees():
    R = plane()
    B = blowup(R, [R.ambient("x^2"), R.ambient("y")])
    assert B.y(0).degree() == 2
    assert B.y(1).degree() == 1


def test_example_fiber_dimensions():
    assert fiber_dimension(equimultiple_example(2).blowup) == 1
    assert fiber_dimension(deviation_one_example(2).blowup) == 2


def test_example_rees_presentations_are_consistent():
    for an in (equimultiple_example(2), deviation_one_example(2)):
        B = an.blowup
        assert B.substitution_check()
        assert B.is_bihomogeneous()


def test_equimultiple_degree_two_piece_matches_quotient_of_powers():
    an = equimultiple_example(2)
    R = an.R
    checks = hilbert_check(an.blowup, R.ideal(["x*y", "t1"]), 3)
    assert all(checks.values())


def test_nilpotent_ideal_collapses():
    S = PolyRing(["x", "u"])
    R = QuotientRing(S, [S("x^3")])
    B = blowup(R, [S("x")])
    I = R.ideal(["x"])
    assert all(hilbert_check(B, I, 5).values())
    # pieces vanish from y-degree 3 on, exactly as I^3 = 0
    for j in (3, 4):
        assert set(graded_piece_dims(B, j, range(8)).values()) == {0}
    assert graded_piece_dims(B, 2, [2]) == {2: 1}


@given(st.integers(0, 10**6))
def test_rees_ideal_substitution_on_random_monomial_ideals(seed):
    rng = random.Random(seed)
    S = PolyRing(["a", "b", "c"])
    d = rng.randint(1, 2)
    mons = rng.sample(list(S.monomials_of_degree(d)), rng.randint(1, 3))
    R = QuotientRing(S, [])
    B = blowup(R, [S.monomial(m) for m in mons])
    assert B.substitution_check() and B.is_bihomogeneous()
    I = Ideal(S, [S.monomial(m) for m in mons])
    assert all(hilbert_check(B, I, 2).values())
