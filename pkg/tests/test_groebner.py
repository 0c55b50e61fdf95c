import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blowup.algebra import PolyRing
from blowup.groebner import (
    Ideal,
    QuotientRing,
    colon,
    groebner_basis,
    intersect,
    krull_dimension,
    normal_form,
    saturate,
)
from blowup.oracle import ideal_piece_dim, macaulay_member

from conftest import equimultiple_ring
from helpers import random_ideal, random_membership_pair

S = PolyRing(["x", "y"])


def leading_ideal(I: Ideal) -> set:
    return set(I.leading_exps())


def test_principal_basis():
    assert groebner_basis(Ideal(S, ["x"])) == [S("x")]


def test_initial_ideal_of_two_quadrics():
    I = Ideal(S, ["x^2 + y^2", "x*y"])
    assert leading_ideal(I) == {(2, 0), (1, 1), (0, 3)}
    # the cubic y^3 really is in I: y^3 = y(x^2+y^2) - x(xy)
    assert macaulay_member(S("y^3"), list(I.gens))


def test_defining_ideal_of_example_ring():
    R = equimultiple_ring(2)
    assert groebner_basis(R.defining) == [R.ambient("x^3*y")]


def test_normal_forms():
    I = Ideal(S, ["x^2 + y^2", "x*y"])
    assert normal_form(S("x^2 + y^2"), I) == 0
    assert normal_form(S("1"), Ideal(S, [1])) == 0


def test_x2y2_not_in_JI_for_equimultiple_example():
    R = equimultiple_ring(2)
    A = R.ambient
    I = R.ideal(["x*y", "t1"])
    J = R.ideal(["t1"])
    JI = R.product(J, I)
    assert normal_form(A("x^2*y^2"), JI) != 0
    assert not macaulay_member(A("x^2*y^2"), list(JI.gens))


def test_products_and_powers():
    R = equimultiple_ring(2)
    A = R.ambient
    I = Ideal(A, ["x*y", "t1"])
    assert I * Ideal(A, [1]) == I
    assert I.power(1) == I
    assert I.power(0) == Ideal(A, [1])
    sq = Ideal(A, ["x^2*y^2", "x*y*t1", "t1^2"])
    assert I.power(2) == sq
    for d in range(2, 6):
        assert ideal_piece_dim(list(I.power(2).gens), d) == ideal_piece_dim(list(sq.gens), d)


def test_intersections():
    I = Ideal(S, ["x^2", "y"])
    assert intersect(I, I) == I
    assert intersect(Ideal(S, ["x"]), Ideal(S, ["y"])) == Ideal(S, ["x*y"])


def test_square_meets_J_in_JI_for_equimultiple_example():
    R = equimultiple_ring(2)
    I = R.ideal(["x*y", "t1"])
    J = R.ideal(["t1"])
    assert intersect(R.power(I, 2), J) == R.product(J, I)


def test_colons():
    I = Ideal(S, ["x*y"])
    assert colon(I, Ideal(S, [1])) == I
    assert colon(I, S("x")) == Ideal(S, ["y"])
    R = equimultiple_ring(2)
    ann = colon(R.defining, R.ambient("x"))
    assert ann.contains(R.ambient("x^2*y"))
    assert macaulay_member(R.ambient("x^2*y"), list(ann.gens))


def test_saturation():
    I = Ideal(S, ["x^3*y", "x^2*y^2"])
    assert saturate(I, S("x")) == Ideal(S, ["y"])


def test_dimensions():
    T = PolyRing(["x", "y", "t1", "t2"])
    assert krull_dimension(Ideal(T, [])) == 4
    assert equimultiple_ring(2).dimension() == 3
    W = PolyRing(["x", "y", "z", "w", "t1", "t2"])
    assert QuotientRing(W, [W("x^4*y"), W("z*w")]).dimension() == 4
    assert krull_dimension(Ideal(T, [1])) == -1


def test_quotient_ring_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        QuotientRing(S, [S("x + 1")])


seeds = st.integers(0, 10**6)


@given(seeds)
def test_membership_matches_macaulay_oracle(seed):
    rng = random.Random(seed)
    T = PolyRing(["a", "b", "c"])
    f, gens = random_membership_pair(rng, T)
    assert Ideal(T, gens).contains(f) == macaulay_member(f, gens)


@given(seeds)
def test_reduced_basis_is_idempotent(seed):
    rng = random.Random(seed)
    T = PolyRing(["a", "b", "c"])
    I = Ideal(T, random_ideal(rng, T))
    gb = groebner_basis(I)
    assert groebner_basis(Ideal(T, gb)) == gb


@given(seeds)
def test_dimension_is_order_independent(seed):
    rng = random.Random(seed)
    T = PolyRing(["a", "b", "c", "d"])
    gens = random_ideal(rng, T, rng.randint(1, 3), 2, 2)
    lex = T.with_order("lex")
    assert krull_dimension(Ideal(T, gens)) == krull_dimension(Ideal(lex, [lex(str(g)) for g in gens]))


@given(seeds)
def test_colon_intersection_duality(seed):
    rng = random.Random(seed)
    T = PolyRing(["a", "b", "c"])
    I = Ideal(T, random_ideal(rng, T, 2, 2, 2))
    J = Ideal(T, random_ideal(rng, T, 2, 2, 2))
    K = intersect(I, J)
    assert I.contains_ideal(K) and J.contains_ideal(K)
    assert K.contains_ideal(I * J)
    assert I.contains_ideal(colon(I, J) * J)
