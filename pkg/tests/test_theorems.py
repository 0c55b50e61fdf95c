import math
import random

from hypothesis import given
from hypothesis import strategies as st

from blowup.algebra import PolyRing
from blowup.groebner import QuotientRing
from blowup.invariants import Analysis
from blowup.theorems import (
    BOUND_HOLDS,
    CHECKERS,
    EQUALITY,
    HYPOTHESES_NOT_MET,
    VIOLATION,
    check_cor_r2,
    check_dev_one,
    check_equimultiple_a,
    check_prop_equi2,
    check_thm_reg,
    check_upper_bound,
    run_checks,
)

from conftest import deviation_one_example, equimultiple_example, maximal


def test_equimultiple_bound_on_equimultiple_example():
    rep = check_equimultiple_a(equimultiple_example(2))
    assert rep.hypotheses_met
    assert (rep.t_value, rep.bound, rep.actual, rep.verdict) == (1, 2, 2, EQUALITY)


def test_equimultiple_bound_with_trivial_reduction():
    rep = check_equimultiple_a(maximal(2))
    assert rep.t_value == math.inf
    assert (rep.bound, rep.actual, rep.verdict) == (2, 2, BOUND_HOLDS)


def test_corollary_on_equimultiple_example():
    for n in (2, 3):
        rep = check_cor_r2(equimultiple_example(n))
        assert rep.verdict == EQUALITY
        assert rep.actual == n


def test_corollary_gate():
    S = PolyRing(["a", "b", "c"])
    # I = (a): depth R/I^2 = depth R/I, so the depth-drop hypothesis fails
    an = Analysis(QuotientRing(S, []), ["a"])
    assert check_cor_r2(an).verdict == HYPOTHESES_NOT_MET


def test_deviation_one_on_deviation_one_example():
    rep = check_dev_one(deviation_one_example(2))
    assert (rep.t_value, rep.bound, rep.actual, rep.verdict) == (1, 3, 3, EQUALITY)
    gated = check_dev_one(deviation_one_example(2), localization_asserted=False)
    assert gated.verdict == HYPOTHESES_NOT_MET
    assert any("localiz" in n for n in gated.notes)


def test_upper_bound_is_tight_on_examples():
    for an in (equimultiple_example(2), deviation_one_example(2)):
        rep = check_upper_bound(an)
        assert rep.verdict == BOUND_HOLDS and rep.tight
    rep = check_upper_bound(maximal(2))
    assert rep.verdict == BOUND_HOLDS and rep.actual <= rep.bound


def test_colon_hypothesis_on_symmetric_instance():
    S = PolyRing(["x", "y", "u", "v"])
    an = Analysis(QuotientRing(S, []), ["x^2", "x*y", "y^2"], J_gens=["x^2", "y^2"])
    rep = check_prop_equi2(an)
    assert rep.hypothesis_checks["I^r : a1 = I^r : a2"]
    assert rep.verdict != VIOLATION


def test_two_generator_gate():
    rep = check_prop_equi2(equimultiple_example(2))
    assert rep.verdict == HYPOTHESES_NOT_MET


def test_regularity_bound():
    rep = check_thm_reg(maximal(2))
    assert (rep.bound, rep.actual, rep.verdict) == (0, 2, BOUND_HOLDS)
    rep = check_thm_reg(equimultiple_example(2))
    assert rep.verdict in (BOUND_HOLDS, EQUALITY)


def test_no_violations_on_examples():
    for an in (equimultiple_example(2), deviation_one_example(2), maximal(3)):
        verdicts = {r.statement_id: r.verdict for r in run_checks(an)}
        assert set(verdicts) == set(CHECKERS)
        assert VIOLATION not in verdicts.values()


def test_hypotheses_never_default_to_true():
    for rep in run_checks(deviation_one_example(2, localization=False)):
        if rep.statement_id == "thm-1.5":
            assert rep.hypothesis_checks["localization (asserted)"] is False


def test_checker_determinism():
    S = PolyRing(["a", "b", "c"])
    runs = []
    for _ in range(2):
        an = Analysis(QuotientRing(S, []), ["a^2", "a*b", "b*c"], seed=11)
        runs.append([(r.statement_id, r.verdict, str(r.bound), str(r.actual), r.notes) for r in run_checks(an)])
    assert runs[0] == runs[1]


@given(st.integers(0, 10**6))
def test_no_violation_on_random_monomial_ideals(seed):
    rng = random.Random(seed)
    S = PolyRing(["a", "b", "c"])
    d = rng.randint(1, 2)
    mons = rng.sample(list(S.monomials_of_degree(d)), rng.randint(1, 3))
    an = Analysis(QuotientRing(S, []), [S.monomial(m) for m in mons], seed=seed)
    for rep in run_checks(an):
        assert rep.verdict != VIOLATION, (rep.statement_id, rep.notes)
