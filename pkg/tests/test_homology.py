import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blowup.algebra import PolyRing
from blowup.groebner import Ideal
from blowup.homology import (
    GradedFreeModule,
    ModuleMap,
    ZeroModuleError,
    a_invariants,
    betti_table,
    cyclic_presentation,
    depth_module,
    free_resolution,
    koszul_cohomology,
    koszul_depth,
    koszul_grade,
    regularity_from_a,
    syzygy,
)
from blowup.oracle import cokernel_dim
from blowup.schreyer import SchreyerFrame

from conftest import deviation_one_example, equimultiple_example, equimultiple_ring
from helpers import random_ideal

NEG_INF = float("-inf")


def bigraded(res):
    out = {}
    for i, F in enumerate(res.modules):
        yt = F.ytwists or (0,) * F.rank
        for d, y in zip(F.twists, yt):
            out[(i, d, y)] = out.get((i, d, y), 0) + 1
    return out


def test_koszul_syzygy_of_two_variables():
    S = PolyRing(["x", "y"])
    M = ModuleMap.from_matrix(S, [[S("x"), S("y")]])
    K = syzygy(M)
    assert len(K.columns) == 1
    col = K.matrix()
    entries = {str(col[0][0]), str(col[1][0])}
    assert {str(-S("y")), "x"} == entries or {"y", str(-S("x"))} == entries


def test_syzygy_of_principal_row_is_zero():
    S = PolyRing(["x", "y"])
    K = syzygy(ModuleMap.from_matrix(S, [[S("x^2 + y^2")]]))
    assert K.source.rank == 0


def test_resolution_of_residue_field():
    S = PolyRing(["x", "y"])
    res = free_resolution(cyclic_presentation(Ideal(S, ["x", "y"])))
    assert res.betti_numbers() == [1, 2, 1]
    assert res.length == 2
    assert res.is_complex() and res.is_minimal()


def test_first_syzygy_of_equimultiple_example_matches_oracle():
    R = equimultiple_ring(2)
    A = R.ambient
    P = cyclic_presentation(R.ideal(["x*y", "t1"]))
    res = free_resolution(P)
    for d in range(0, 7):
        assert res.hilbert_function(d) == cokernel_dim(A, P.columns, P.target.twists, d)


def test_lifted_equimultiple_resolution():
    R = equimultiple_ring(2)
    res = free_resolution(cyclic_presentation(R.ideal(["x*y", "t1"])))
    assert res.projective_dimension == 2


def test_depth_examples():
    S = PolyRing(["a", "b", "c"])
    assert depth_module(cyclic_presentation(Ideal(S, []))) == 3
    an = equimultiple_example(2)
    assert an.depth_powers(2) == {1: 2, 2: 1}
    an = deviation_one_example(2)
    assert an.depth_powers(3) == {1: 3, 2: 2, 3: 1}
    with pytest.raises(ZeroModuleError):
        depth_module(cyclic_presentation(Ideal(S, [1])))


def test_koszul_grade_of_polynomial_ring():
    S = PolyRing(["x", "y"])
    P = cyclic_presentation(Ideal(S, []))
    assert [koszul_cohomology(S.gens(), P, i).nonzero for i in range(3)] == [False, False, True]
    assert koszul_grade(S.gens(), P) == 2


def test_koszul_depth_of_equimultiple_example():
    R = equimultiple_ring(2)
    P = cyclic_presentation(R.ideal(["x*y", "t1"]))
    assert koszul_depth(P) == depth_module(P) == 2


def test_koszul_grade_of_Gplus_for_equimultiple_example():
    an = equimultiple_example(2)
    B = an.blowup
    P = B.g_presentation()
    assert koszul_grade([B.y(i) for i in range(B.n)], P) == 1


def test_a_invariants_of_polynomial_ring():
    S = PolyRing(["y1", "y2"], yvars=["y1", "y2"])
    P = ModuleMap(GradedFreeModule(S, (), ()), GradedFreeModule(S, (0,), (0,)), [])
    data = a_invariants([0, 1], P, range(3))
    assert data.status == "exact"
    assert data.a_invariants == {0: NEG_INF, 1: NEG_INF, 2: -2}
    assert regularity_from_a(data.a_invariants) == 0


def test_regularity_of_equimultiple_example_is_at_least_r():
    reg = equimultiple_example(2).regularity
    assert reg.status == "exact"
    assert reg.value >= 2
    assert reg.value == 2  # regression constant from the stabilised colimit


@st.composite
def ideals(draw):
    seed = draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    S = PolyRing(["a", "b", "c", "d"])
    return S, random_ideal(rng, S, rng.randint(1, 4), 3, 3)


@given(ideals())
def test_frame_betti_equals_minimal_resolution(data):
    S, gens = data
    P = cyclic_presentation(Ideal(S, gens))
    res = free_resolution(P)
    assert betti_table(P).entries == bigraded(res)
    assert res.is_complex() and res.is_minimal()


@given(ideals())
def test_betti_hilbert_function_matches_linear_algebra(data):
    S, gens = data
    P = cyclic_presentation(Ideal(S, gens))
    res = free_resolution(P)
    top = 2 * max(P.source.twists, default=1)
    for d in range(top + 1):
        assert res.hilbert_function(d) == cokernel_dim(S, P.columns, P.target.twists, d)


@given(ideals())
def test_dual_algorithm_depth(data):
    S, gens = data
    I = Ideal(S, gens)
    if I.is_unit():
        return
    P = cyclic_presentation(I)
    d = depth_module(P)
    assert koszul_depth(P) == d
    assert koszul_grade(list(I.gens), cyclic_presentation(Ideal(S, []))) <= 4
    assert d <= I.dimension()


def test_frame_on_module_with_ytwists():
    an = deviation_one_example(2)
    P = an.blowup.g_presentation()
    frame = SchreyerFrame(P.ring, P.columns, P.target.twists, P.target.ytwists)
    assert frame.betti() == bigraded(free_resolution(P))


def test_zero_ring_has_empty_betti_table():
    S = PolyRing(["a"])
    assert betti_table(cyclic_presentation(Ideal(S, [1]))).is_zero
