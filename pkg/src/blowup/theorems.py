"""Checkers for the depth bounds on the associated graded ring.

Every checker takes an :class:`~blowup.invariants.Analysis`, evaluates the
hypotheses of one statement, computes the asserted bound and compares it with
the computed invariant.  Hypothesis failure is a verdict, never an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .groebner import Ideal, colon, intersect, saturate
from .homology import ZeroModuleError, cyclic_presentation, depth_module
from .invariants import Analysis, depth_y_piece, filter_regular_check

INF = math.inf

HYPOTHESES_NOT_MET = "HYPOTHESES_NOT_MET"
BOUND_HOLDS = "BOUND_HOLDS"
EQUALITY = "EQUALITY"
VIOLATION = "VIOLATION"
SKIPPED_UNRESOLVED = "SKIPPED-UNRESOLVED"

VERDICTS = (HYPOTHESES_NOT_MET, BOUND_HOLDS, EQUALITY, VIOLATION, SKIPPED_UNRESOLVED)

LOCALIZATION_NOTE = ("localization hypothesis r(I_P) < r for primes P of height g is a user assertion; "
                     "it is not computed")


@dataclass
class TheoremReport:
    statement_id: str
    hypothesis_checks: dict[str, bool] = field(default_factory=dict)
    evidence: dict[str, str] = field(default_factory=dict)
    t_value: float | None = None
    bound: float | None = None
    actual: float | None = None
    verdict: str = HYPOTHESES_NOT_MET
    tight: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def hypotheses_met(self) -> bool:
        return all(self.hypothesis_checks.values())


def _t_value(depths: dict[int, int], r: int) -> float:
    """``min{depth R/I^j - r + j | 1 <= j <= r}``; ``+inf`` on the empty range ``r = 0``."""
    if r == 0:
        return INF
    return min(depths[j] - r + j for j in range(1, r + 1))


def _lower_verdict(rep: TheoremReport) -> TheoremReport:
    if not rep.hypotheses_met:
        rep.verdict = HYPOTHESES_NOT_MET
    elif rep.actual < rep.bound:
        rep.verdict = VIOLATION
    elif rep.actual == rep.bound:
        rep.verdict = EQUALITY
    else:
        rep.verdict = BOUND_HOLDS
    return rep


def _depth_ideal(I: Ideal) -> float:
    try:
        return depth_module(cyclic_presentation(I))
    except ZeroModuleError:
        return INF


def _depth(an: Analysis, j: int) -> float:
    """``depth R/I^j`` with ``R/I^0 = 0`` given depth ``+inf``."""
    return INF if j <= 0 else an.depth_power(j)


def _common(an: Analysis, rep: TheoremReport):
    rep.hypothesis_checks["R Cohen-Macaulay"] = an.is_CM
    rep.evidence["R Cohen-Macaulay"] = f"depth R = {an.depth_R}, dim R = {an.dim_R}"


def _reduction_hyp(an: Analysis, rep: TheoremReport, need: int):
    red = an.reduction
    rep.hypothesis_checks[f"reduction with {need} generators"] = red.is_verified_reduction and red.s == need
    rep.evidence[f"reduction with {need} generators"] = f"s = {red.s}, r_J = {red.r_J}"
    rep.notes.append(f"r_J = {red.r_J} stands in for r(I) (r(I) <= r_J)")


# ---------------------------------------------------------------------------


def _check_equimultiple(an: Analysis, part: str) -> TheoremReport:
    rep = TheoremReport(f"thm-1.1{part}")
    _common(an, rep)
    g, l, grade = an.height, an.ell, an.grade_Gplus
    rep.hypothesis_checks["equimultiple"] = g is not None and l == g
    rep.evidence["equimultiple"] = f"g = {g}, l = {l}"
    want = g if part == "a" else (g - 1 if g is not None else None)
    rep.hypothesis_checks["grade G+"] = grade == want
    rep.evidence["grade G+"] = f"grade = {grade}, required {want}"
    if g is None:
        return _lower_verdict(rep)
    _reduction_hyp(an, rep, l)
    r = an.reduction.r_J
    t = _t_value(an.depth_powers(max(r, 1)), r)
    rep.t_value = t
    floor = 0 if part == "a" else -1
    if t == INF:
        rep.bound = g + floor if part == "b" else g
        rep.notes.append("r = 0: t = +inf by the empty-range convention; bound is the unconditional part")
    else:
        rep.bound = g + max(floor, t)
    rep.actual = an.depth_G
    _lower_verdict(rep)
    if t == INF and rep.verdict == EQUALITY:
        rep.verdict = BOUND_HOLDS
    return rep


def check_equimultiple_a(an: Analysis) -> TheoremReport:
    return _check_equimultiple(an, "a")


def check_equimultiple_b(an: Analysis) -> TheoremReport:
    return _check_equimultiple(an, "b")


def check_upper_bound(an: Analysis, widen: int = 2) -> TheoremReport:
    """``depth G <= inf_j depth R/I^j + l`` with the infimum truncated at ``r_hat + s``."""
    rep = TheoremReport("rem-1.2")
    reg = an.regularity
    s = an.reduction.s
    top = max(reg.value + s, 1)
    l = an.ell
    rep.bound = min(an.depth_power(j) for j in range(1, top + 1)) + l
    rep.actual = an.depth_G
    wide = min(an.depth_power(j) for j in range(1, top + widen + 1)) + l
    rep.evidence["truncation"] = f"1 <= j <= {top} (r_hat {reg.status})"
    rep.evidence["widened"] = f"j <= {top + widen}: bound {wide}"
    if wide != rep.bound:
        rep.notes.append(f"widening the window to j <= {top + widen} changes the bound to {wide}")
    if rep.actual > rep.bound:
        rep.verdict = VIOLATION
    else:
        rep.verdict = BOUND_HOLDS
        rep.tight = rep.actual == rep.bound
    return rep


def check_cor_r2(an: Analysis) -> TheoremReport:
    rep = TheoremReport("cor-1.3")
    _common(an, rep)
    g, l, grade = an.height, an.ell, an.grade_Gplus
    rep.hypothesis_checks["equimultiple"] = g is not None and l == g
    rep.evidence["equimultiple"] = f"g = {g}, l = {l}"
    if g is None:
        return _lower_verdict(rep)
    _reduction_hyp(an, rep, l)
    r = an.reduction.r_J
    rep.hypothesis_checks["reduction number two"] = r == 2
    d1, d2 = an.depth_power(1), an.depth_power(2)
    rep.hypothesis_checks["depth R/I^2 < depth R/I"] = d2 < d1
    rep.evidence["depth R/I^2 < depth R/I"] = f"{d2} < {d1}"
    rep.hypothesis_checks["grade G+ in {g, g-1}"] = grade in (g, g - 1)
    rep.evidence["grade G+ in {g, g-1}"] = f"grade = {grade}, g = {g}"
    rep.bound = g + d2
    rep.actual = an.depth_G
    if not rep.hypotheses_met:
        rep.verdict = HYPOTHESES_NOT_MET
    else:
        rep.verdict = EQUALITY if rep.actual == rep.bound else VIOLATION
    return rep


def check_dev_one(an: Analysis, localization_asserted: bool | None = None) -> TheoremReport:
    rep = TheoremReport("thm-1.5")
    _common(an, rep)
    flag = an.localization_asserted if localization_asserted is None else localization_asserted
    g, l, grade = an.height, an.ell, an.grade_Gplus
    rep.hypothesis_checks["analytic deviation one"] = g is not None and l == g + 1
    rep.evidence["analytic deviation one"] = f"g = {g}, l = {l}"
    rep.hypothesis_checks["grade G+ = g"] = grade == g
    rep.evidence["grade G+ = g"] = f"grade = {grade}"
    rep.hypothesis_checks["localization (asserted)"] = bool(flag)
    rep.evidence["localization (asserted)"] = "asserted by user" if flag else "not asserted"
    rep.notes.append(LOCALIZATION_NOTE)
    if g is None:
        return _lower_verdict(rep)
    _reduction_hyp(an, rep, l)
    r = an.reduction.r_J
    t = _t_value(an.depth_powers(max(r, 1)), r)
    rep.t_value = t
    if t == INF:
        rep.bound = g
        rep.notes.append("r = 0: t = +inf by the empty-range convention; bound is the unconditional part")
    else:
        rep.bound = g + 1 + max(-1, t)
    rep.actual = an.depth_G
    _lower_verdict(rep)
    if t == INF and rep.verdict == EQUALITY:
        rep.verdict = BOUND_HOLDS
    return rep


def _two_generator_bounds(an: Analysis, rep: TheoremReport, r: int):
    """Conclusions shared by the two-generator statements; sets bound and actual."""
    floor = min(_depth(an, r) - 1, _depth(an, r + 1))
    powers_ok = {j: _depth(an, j) >= floor for j in range(r + 1, r + 4)}
    rep.evidence["depth R/I^j >= min(depth R/I^r - 1, depth R/I^(r+1)), r < j <= r+3"] = str(
        {j: _depth(an, j) for j in powers_ok}) + f" vs {floor}"
    rep.bound = min([_depth(an, j) for j in range(1, r)] + [floor])
    rep.actual = an.depth_G
    _lower_verdict(rep)
    if rep.hypotheses_met and not all(powers_ok.values()):
        rep.verdict = VIOLATION
        rep.notes.append("power-depth conclusion fails")


def _colons_equal(an: Analysis, r: int, a1, a2) -> bool:
    P = an.power(r)
    return colon(P, a1) == colon(P, a2)


def check_prop_equi2(an: Analysis) -> TheoremReport:
    rep = TheoremReport("prop-1.8")
    g, l = an.height, an.ell
    rep.hypothesis_checks["equimultiple of height two"] = g == 2 and l == 2
    rep.evidence["equimultiple of height two"] = f"g = {g}, l = {l}"
    red = an.reduction
    rep.hypothesis_checks["two-generated reduction"] = red.s == 2
    if not rep.hypotheses_met:
        rep.verdict = HYPOTHESES_NOT_MET
        return rep
    r = red.r_J
    a1, a2 = red.J_gens
    eq = _colons_equal(an, r, a1, a2)
    rep.hypothesis_checks["I^r : a1 = I^r : a2"] = eq
    rep.evidence["I^r : a1 = I^r : a2"] = f"r = {r}"
    _two_generator_bounds(an, rep, r)
    return rep


def check_rem_dev1(an: Analysis) -> TheoremReport:
    rep = TheoremReport("rem-1.9")
    g, l = an.height, an.ell
    rep.hypothesis_checks["deviation one of height one"] = g == 1 and l == 2
    rep.evidence["deviation one of height one"] = f"g = {g}, l = {l}"
    red = an.reduction
    rep.hypothesis_checks["two-generated reduction"] = red.s == 2
    if not rep.hypotheses_met:
        rep.verdict = HYPOTHESES_NOT_MET
        return rep
    r = red.r_J
    R = an.R
    found = None
    for a1, a2 in (tuple(red.J_gens), tuple(reversed(red.J_gens))):
        if not _colons_equal(an, r, a1, a2):
            continue
        A1 = Ideal(an.S, [a1]) + R.defining
        sat = saturate(A1, a2)
        if A1.contains_ideal(intersect(sat, an.power(r))):
            found = (a1, a2)
            break
    rep.hypothesis_checks["(a1 : a2^n) meet I^r in (a1), I^r : a1 = I^r : a2"] = found is not None
    if found:
        rep.evidence["order"] = f"a1 = {found[0]}, a2 = {found[1]}"
    _two_generator_bounds(an, rep, r)
    return rep


def check_thm_reg(an: Analysis) -> TheoremReport:
    rep = TheoremReport("thm-2.5")
    _common(an, rep)
    reg = an.regularity
    rep.hypothesis_checks["verified reduction"] = an.reduction.is_verified_reduction
    if reg.status != "exact":
        rep.verdict = SKIPPED_UNRESOLVED
        rep.notes.append(f"r_hat {reg.status}: lower bound {reg.value} does not instantiate the bound soundly")
        return rep
    rh, s = reg.value, an.reduction.s
    vals = [an.depth_power(j) for j in range(1, rh + 2)]
    vals += [an.depth_power(j) + j - rh for j in range(rh + 2, s + rh + 1)]
    rep.bound = min(vals)
    rep.actual = an.depth_G
    rep.evidence["r_hat"] = str(rh)
    return _lower_verdict(rep)


def _filter_basis(an: Analysis, rep: TheoremReport):
    reg = an.regularity
    if reg.status != "exact":
        rep.verdict = SKIPPED_UNRESOLVED
        rep.notes.append("r_hat not exact")
        return None
    red = an.reduction
    fr = an._memo("filter", lambda: filter_regular_check(an, red, reg.value, seed=an.seed))
    rep.evidence["filter-regular search"] = "; ".join(fr.attempts)
    return fr


def check_lemma_depth_products(an: Analysis) -> TheoremReport:
    """``depth R/a_i I^j >= min({d-i} + {depth R/I^(j-n) - n | n < i})`` over the window."""
    rep = TheoremReport("lem-2.2")
    _common(an, rep)
    fr = _filter_basis(an, rep)
    if fr is None:
        return rep
    rep.hypothesis_checks["basis satisfies condition (1)"] = fr.passed
    basis_h = fr.passed and all(a.is_homogeneous() for a in fr.basis)
    rep.hypothesis_checks["homogeneous basis"] = basis_h
    if not rep.hypotheses_met:
        rep.verdict = HYPOTHESES_NOT_MET
        return rep
    rh, s, d = an.regularity.value, an.reduction.s, an.dim_R
    R, S = an.R, an.S
    worst = None
    for i in range(s + 1):
        ai = Ideal(S, list(fr.basis[:i]))
        for j in range(rh + i, rh + s + 2):
            if j < 1:
                continue
            bound = min([d - i] + [_depth(an, j - n) - n for n in range(i)])
            actual = _depth_ideal(R.product(ai, an.power(j))) if i else an.depth_R
            slack = actual - bound
            if worst is None or slack < worst[0]:
                worst = (slack, i, j, bound, actual)
    _, i, j, rep.bound, rep.actual = worst
    rep.evidence["tightest (i, j)"] = f"({i}, {j})"
    return _lower_verdict(rep)


def check_lemma_graded_pieces(an: Analysis) -> TheoremReport:
    """``depth [G/(a_1*..a_i*)]_j`` against the power-depth minimum over the window."""
    rep = TheoremReport("lem-2.3")
    _common(an, rep)
    fr = _filter_basis(an, rep)
    if fr is None:
        return rep
    rep.hypothesis_checks["basis satisfies condition (2)"] = fr.passed
    forms_h = fr.passed and all(z.is_homogeneous() for z in fr.initial_forms)
    rep.hypothesis_checks["homogeneous initial forms"] = forms_h
    if not rep.hypotheses_met:
        rep.verdict = HYPOTHESES_NOT_MET
        return rep
    B = an.blowup
    rh, s = an.regularity.value, an.reduction.s
    worst = None
    for i in range(s + 1):
        D = B.g_ideal + Ideal(B.ring, list(fr.initial_forms[:i]))
        for j in range(rh + i + 1, rh + s + 2):
            bound = min([_depth(an, n) + n - j - 1 for n in range(j - i + 1, j + 2)]
                        + [_depth(an, j - i) - i + 1])
            actual = depth_y_piece(B, D, j)
            slack = actual - bound
            if worst is None or slack < worst[0]:
                worst = (slack, i, j, bound, actual)
    if worst is None:
        rep.verdict = BOUND_HOLDS
        rep.notes.append("empty window")
        return rep
    _, i, j, rep.bound, rep.actual = worst
    rep.evidence["tightest (i, j)"] = f"({i}, {j})"
    return _lower_verdict(rep)


CHECKERS: dict[str, Callable[[Analysis], TheoremReport]] = {
    "thm-1.1a": check_equimultiple_a,
    "thm-1.1b": check_equimultiple_b,
    "rem-1.2": check_upper_bound,
    "cor-1.3": check_cor_r2,
    "thm-1.5": check_dev_one,
    "prop-1.8": check_prop_equi2,
    "rem-1.9": check_rem_dev1,
    "thm-2.5": check_thm_reg,
    "lem-2.2": check_lemma_depth_products,
    "lem-2.3": check_lemma_graded_pieces,
}


def run_checks(an: Analysis, ids=None) -> list[TheoremReport]:
    ids = list(CHECKERS) if ids is None else list(ids)
    unknown = [i for i in ids if i not in CHECKERS]
    if unknown:
        raise KeyError(f"unknown checker ids: {unknown}")
    return [CHECKERS[i](an) for i in ids]
