"""Numerical invariants of an ideal ``I`` in a graded quotient ring ``R = S/K``.

:class:`Analysis` bundles ``(R, I, J)`` and caches every expensive object
(powers of ``I``, their depths, the blow-up presentation, the resolution of
``G``), so theorem checkers can ask for whatever they need in any order.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Polynomial
from .groebner import Ideal, QuotientRing, colon, intersect, krull_dimension
from .homology import (
    MAX_POWER,
    ZeroModuleError,
    a_invariants,
    betti_table,
    cyclic_presentation,
    depth_module,
    koszul_grade,
    ModuleMap,
    GradedFreeModule,
)
from .rees import BlowupPresentation, blowup, hilbert_check

log = logging.getLogger(__name__)

R_MAX = 30
MAX_DRAWS = 10


class ReductionError(RuntimeError):
    """No reduction could be confirmed (cap exceeded or genericity failure)."""


class NotCohenMacaulay(ValueError):
    pass


@dataclass
class ReductionData:
    J_gens: list[Polynomial]
    coeff_matrix: list[list[int]] | None
    r_J: int | None
    is_verified_reduction: bool
    trials: int
    user_supplied: bool = False
    method: str = "gb-equality"

    @property
    def s(self) -> int:
        return len(self.J_gens)

    @property
    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.J_gens)


@dataclass
class RegularityData:
    value: int | None
    status: str  # exact | lower-bound-only | unresolved
    lower: int | None
    upper: int | None
    a_invariants: dict[int, float] = field(default_factory=dict)
    stabilized_at: int | None = None
    notes: list[str] = field(default_factory=list)


@dataclass
class InvariantReport:
    dim_R: int
    depth_R: int
    is_CM_R: bool
    g: int | None
    l: int
    analytic_deviation: int | None
    is_equimultiple: bool | None
    reduction: ReductionData
    depths_of_powers: dict[int, int]
    depth_G: int
    grade_Gplus: int
    regularity: RegularityData
    notes: list[str] = field(default_factory=list)

    def check_invariants(self) -> list[str]:
        """Violated structural inequalities (empty when all hold)."""
        bad = []
        if self.g is not None and not (self.g <= self.l <= self.dim_R):
            bad.append(f"g <= l <= dim R fails: {self.g}, {self.l}, {self.dim_R}")
        reg = self.regularity
        if reg.status == "exact" and self.reduction.r_J is not None and reg.value < self.reduction.r_J:
            bad.append(f"reg G = {reg.value} < r_J = {self.reduction.r_J}")
        if not (self.grade_Gplus <= self.depth_G <= self.dim_R):
            bad.append(f"grade <= depth G <= dim R fails: {self.grade_Gplus}, {self.depth_G}, {self.dim_R}")
        return bad


# ---------------------------------------------------------------------------
# standalone operations


def height(R: QuotientRing, I: Ideal) -> int:
    """``dim R - dim R/I``; only meaningful (and only allowed) for Cohen-Macaulay ``R``."""
    if not is_cohen_macaulay(R):
        raise NotCohenMacaulay("R is not Cohen-Macaulay; dim R - dim R/I need not be the height")
    J = R.lift(I)
    if J == R.defining:
        raise ValueError("height of the zero ideal requested")
    if J.is_unit():
        raise ValueError("height of the unit ideal requested")
    return R.dimension() - krull_dimension(J)


def depth_ring(R: QuotientRing) -> int:
    return depth_module(cyclic_presentation(R.defining))


def is_cohen_macaulay(R: QuotientRing) -> bool:
    return depth_ring(R) == R.dimension()


def analytic_spread(B: BlowupPresentation) -> int:
    from .rees import fiber_cone

    return krull_dimension(fiber_cone(B))


def _is_reduction_at(R: QuotientRing, J: Ideal, P_r: Ideal, P_r1: Ideal, homogeneous: bool) -> bool:
    """Is ``I^{r+1} = J I^r`` (locally at the maximal ideal for inhomogeneous ``J``)?"""
    JP = (J * P_r) + R.defining
    if homogeneous:
        return JP == P_r1
    C = colon(JP, P_r1)
    return (C + R.maximal_ideal()).is_unit()


def reduction_number(R: QuotientRing, I: Ideal, J_gens: Sequence[Polynomial], r_max: int = R_MAX,
                     powers=None) -> int | None:
    """Least ``r`` with ``I^{r+1} = J I^r``; ``None`` if not found up to ``r_max``."""
    S = R.ambient
    J = Ideal(S, J_gens)
    hom = all(g.is_homogeneous() for g in J_gens)
    power = powers or (lambda j: R.power(I, j))
    for r in range(r_max + 1):
        if _is_reduction_at(R, J, power(r), power(r + 1), hom):
            return r
    return None


def find_reduction(R: QuotientRing, I: Ideal, s: int, seed: int = 0,
                   J_gens: Sequence[Polynomial] | None = None, r_max: int = R_MAX,
                   draws: int = MAX_DRAWS, powers=None, ell: int | None = None) -> ReductionData:
    """A verified reduction of ``I`` with ``s`` generators and its reduction number.

    With ``J_gens`` the generators are only verified; otherwise ``s`` random
    ``F_p``-linear combinations of the generators of ``I`` are drawn (up to
    ``draws`` times).
    """
    S = R.ambient
    gens = [g for g in I.gens if g not in R.defining]
    if J_gens is not None:
        J_gens = [S(g) for g in J_gens]
        J = R.lift(Ideal(S, J_gens))
        if not I.contains_ideal(J):
            raise ReductionError("supplied J is not contained in I")
        hom = all(g.is_homogeneous() for g in J_gens)
        r = reduction_number(R, I, J_gens, r_max, powers)
        if r is None:
            raise ReductionError(f"reduction not confirmed: I^(r+1) != J I^r for all r <= {r_max}")
        return ReductionData(list(J_gens), None, r, True, 0, True,
                             "gb-equality" if hom else "local-colon")
    if ell is not None and s < ell:
        raise ReductionError(f"s = {s} < analytic spread {ell}: no reduction with s generators")
    rng = random.Random(seed)
    p = S.p
    for trial in range(1, draws + 1):
        mat = [[rng.randrange(1, p) for _ in gens] for _ in range(s)]
        cand = [sum((gens[k].scale(c) for k, c in enumerate(row)), S.zero()) for row in mat]
        hom = all(g.is_homogeneous() for g in cand)
        r = reduction_number(R, I, cand, r_max, powers)
        if r is not None:
            return ReductionData(cand, mat, r, True, trial, False,
                                 "gb-equality" if hom else "local-colon")
    raise ReductionError(
        f"genericity failure: {draws} random draws of {s} combinations gave no reduction "
        f"(is s >= analytic spread, is p = {p} large enough?)")


def vv_condition(R: QuotientRing, I: Ideal, x_or_J: "Polynomial | Sequence[Polynomial]", j_max: int,
                 powers=None) -> dict:
    """``I^j`` meets ``(x)`` in ``x I^{j-1}`` for ``1 <= j <= j_max``; ``x`` regular on ``R``."""
    S = R.ambient
    xs = [x_or_J] if isinstance(x_or_J, Polynomial) else list(x_or_J)
    X = R.lift(Ideal(S, xs))
    power = powers or (lambda j: R.power(I, j))
    verdict = {}
    for j in range(1, j_max + 1):
        lhs = intersect(power(j), X)
        rhs = R.product(X, power(j - 1))
        verdict[j] = lhs == rhs
    regular = None
    if len(xs) == 1:
        regular = colon(R.defining, xs[0]) == R.defining
    return {"per_j": verdict, "holds": all(verdict.values()), "x_regular": regular}


# ---------------------------------------------------------------------------
# the analysis object


class Analysis:
    """All invariants of ``(R, I)`` with a chosen or random reduction ``J``."""

    def __init__(self, R: QuotientRing, I_gens: Sequence[Polynomial | str], J_gens=None,
                 seed: int = 0, r_max: int = R_MAX, s: int | None = None,
                 localization_asserted: bool = False, max_power: int = MAX_POWER):
        S = R.ambient
        self.R = R
        self.S = S
        self.I_gens = [S(g) for g in I_gens]
        self.I = R.ideal(self.I_gens)
        if self.I == R.defining:
            raise ValueError("I is zero in R")
        if self.I.is_unit():
            raise ValueError("I is the unit ideal")
        self.J_user = [S(g) for g in J_gens] if J_gens is not None else None
        self.seed = seed
        self.r_max = r_max
        self.s_request = s
        self.localization_asserted = localization_asserted
        self.max_power = max_power
        self._powers: dict[int, Ideal] = {}
        self._depths: dict[int, int] = {}
        self._cache: dict[str, object] = {}
        self.notes: list[str] = []

    # powers and their depths ----------------------------------------------
    def power(self, j: int) -> Ideal:
        if j not in self._powers:
            if j == 0:
                self._powers[0] = Ideal(self.S, [1])
            elif j == 1:
                self._powers[1] = self.I.minimalized()
            else:
                base = [g for g in self.I_gens]
                prev = self.power(j - 1)
                own = Ideal(self.S, [a * b for a in prev.gens for b in base])
                self._powers[j] = (own + self.R.defining).minimalized()
        return self._powers[j]

    def depth_power(self, j: int) -> int:
        if j not in self._depths:
            self._depths[j] = depth_module(cyclic_presentation(self.power(j)))
        return self._depths[j]

    def depth_powers(self, j_max: int) -> dict[int, int]:
        return {j: self.depth_power(j) for j in range(1, j_max + 1)}

    def _memo(self, name, fn):
        if name not in self._cache:
            self._cache[name] = fn()
        return self._cache[name]

    # ring-level invariants ----------------------------------------------------
    @property
    def dim_R(self) -> int:
        return self._memo("dim_R", self.R.dimension)

    @property
    def depth_R(self) -> int:
        return self._memo("depth_R", lambda: depth_ring(self.R))

    @property
    def is_CM(self) -> bool:
        return self.depth_R == self.dim_R

    @property
    def height(self) -> int | None:
        def f():
            if not self.is_CM:
                self.notes.append("R is not Cohen-Macaulay: height not computed")
                return None
            return self.dim_R - krull_dimension(self.I)
        return self._memo("g", f)

    # blow-up ----------------------------------------------------------------
    @property
    def blowup(self) -> BlowupPresentation:
        gens = self.power(1).gens
        gens = [g for g in gens if g not in self.R.defining]
        return self._memo("B", lambda: blowup(self.R, gens))

    @property
    def ell(self) -> int:
        return self._memo("l", lambda: analytic_spread(self.blowup))

    @property
    def g_resolution(self):
        return self._memo("Gres", lambda: betti_table(self.blowup.g_presentation()))

    @property
    def depth_G(self) -> int:
        return self._memo("depth_G", lambda: self.blowup.ring.nvars - self.g_resolution.length)

    @property
    def grade_Gplus(self) -> int:
        B = self.blowup
        ys = [B.y(i) for i in range(B.n)]
        return self._memo("grade", lambda: int(koszul_grade(ys, B.g_presentation())))

    # reduction ----------------------------------------------------------------
    @property
    def reduction(self) -> ReductionData:
        def f():
            if self.J_user is not None:
                return find_reduction(self.R, self.I, len(self.J_user), J_gens=self.J_user,
                                      r_max=self.r_max, powers=self.power)
            s = self.s_request if self.s_request is not None else self.ell
            return find_reduction(self.R, self.I, s, seed=self.seed, r_max=self.r_max,
                                  powers=self.power, ell=self.ell)
        return self._memo("reduction", f)

    def initial_forms(self, J_gens: Sequence[Polynomial], coeffs=None) -> list[Polynomial]:
        """Images of elements of ``I`` in ``G_1 = I/I^2`` as y-linear forms of ``A``."""
        B = self.blowup
        A = B.ring
        out = []
        for k, a in enumerate(J_gens):
            if coeffs is not None and coeffs[k] is not None and len(coeffs[k]) == B.n:
                out.append(sum((B.y(i).scale(c) for i, c in enumerate(coeffs[k])), A.zero()))
                continue
            out.append(_initial_form(B, a))
        return out

    # regularity -------------------------------------------------------------
    @property
    def regularity(self) -> RegularityData:
        return self._memo("reg", self._regularity)

    def _regularity(self) -> RegularityData:
        B = self.blowup
        red = self.reduction
        lower = red.r_J
        upper = self.g_resolution.max_ytwist_bound()
        grade = self.grade_Gplus
        ell = self.ell
        n = B.n
        # H^i_{G+}(G) vanishes below the grade and above the arithmetic rank of G+, which is at most l
        vanishing = [i for i in range(n + 1) if i < grade or i > ell]
        lc = a_invariants(B.y_indices, B.g_presentation(), range(n + 1),
                          window=(lower, upper), max_power=self.max_power, vanishing=vanishing)
        data = RegularityData(None, "unresolved", lower, upper, dict(lc.a_invariants),
                              lc.stabilized_at, notes=list(lc.notes))
        data.notes.append(f"a_i = -inf for i < grade = {grade} and i > l = {ell} (not computed)")
        if lc.status == "exact":
            data.value = int(lc.regularity)
            data.status = "exact"
            if upper is not None and data.value != upper:
                data.notes.append(f"colimit value {data.value} differs from the Tor y-regularity {upper}")
        else:
            data.value = lower
            data.status = "lower-bound-only"
            data.notes.append("regularity unresolved by the colimit; value is r_J (a lower bound)")
        return data

    # assembled report -------------------------------------------------------------
    def report(self, extra_powers: int = 0) -> InvariantReport:
        red = self.reduction
        reg = self.regularity
        g = self.height
        l = self.ell
        top = max(red.r_J + 1, (reg.value if reg.value is not None else red.r_J) + red.s, 2) + extra_powers
        depths = self.depth_powers(top)
        for j in sorted(self._depths):
            depths[j] = self._depths[j]
        return InvariantReport(
            dim_R=self.dim_R,
            depth_R=self.depth_R,
            is_CM_R=self.is_CM,
            g=g,
            l=l,
            analytic_deviation=(l - g) if g is not None else None,
            is_equimultiple=(l == g) if g is not None else None,
            reduction=red,
            depths_of_powers=dict(sorted(depths.items())),
            depth_G=self.depth_G,
            grade_Gplus=self.grade_Gplus,
            regularity=reg,
            notes=list(self.notes),
        )

    def hilbert_consistency(self, j_max: int | None = None) -> dict[int, bool]:
        if j_max is None:
            reg = self.regularity
            rhat = reg.value if reg.value is not None else self.reduction.r_J
            j_max = rhat + self.reduction.s + 1
        return hilbert_check(self.blowup, self.I, j_max, powers=self.power)


def _initial_form(B: BlowupPresentation, a: Polynomial) -> Polynomial:
    """``a*`` in ``G_1``: the t-free normal form of ``a t`` modulo ``(y - f t) + K``."""
    from .algebra import MonomialOrder, PolyRing

    if not a.is_homogeneous():
        raise ValueError("initial forms of inhomogeneous elements need explicit coefficients")
    key = "_elim"
    E_ideal = getattr(B, key, None)
    A = B.ring
    S = B.base.ambient
    if E_ideal is None:
        degs = [f.degree() for f in B.ideal_gens]
        E = PolyRing(("t_",) + A.variables, S.field, MonomialOrder.block((1, "grevlex"), (A.nvars, "grevlex")),
                     (1,) + S.weights + tuple(d + 1 for d in degs))
        t = E.gen(0)
        xs = [E.gen(1 + i) for i in range(S.nvars)]
        ys = [E.gen(1 + S.nvars + i) for i in range(B.n)]
        gens = [ys[i] - f.substitute(xs, E) * t for i, f in enumerate(B.ideal_gens)]
        gens += [k.substitute(xs, E) for k in B.base.defining.gens]
        E_ideal = Ideal(E, gens)
        setattr(B, key, E_ideal)
    E = E_ideal.ring
    xs = [E.gen(1 + i) for i in range(S.nvars)]
    nf = E_ideal.normal_form(a.substitute(xs, E) * E.gen(0))
    if any(e[0] for e in nf.terms):
        raise ValueError(f"{a} is not in I")
    return Polynomial(A, {e[1:]: c for e, c in nf.terms.items()})


# ---------------------------------------------------------------------------
# graded pieces of G and filter-regular bases


def _y_monomials(n: int, k: int):
    if k < 0:
        return
    for combo in itertools.combinations_with_replacement(range(n), k):
        b = [0] * n
        for i in combo:
            b[i] += 1
        yield tuple(b)


def _y_split(A, f: Polynomial) -> dict[int, Polynomial]:
    yi = A.yindices
    parts: dict[int, dict] = {}
    for e, c in f.terms.items():
        parts.setdefault(sum(e[i] for i in yi), {})[e] = c
    return {d: Polynomial(A, t) for d, t in parts.items()}


def y_piece_presentation(B: BlowupPresentation, D: Ideal, j: int) -> ModuleMap:
    """Presentation over ``S`` of the y-degree ``j`` component of ``A/D``.

    ``D`` must be y-homogeneous and homogeneous.  Generators are the
    y-monomials of degree ``j``; relations are ``y^b g`` for ``g`` in a
    Groebner basis of ``D``.
    """
    A = B.ring
    S = B.base.ambient
    yi = A.yindices
    n = len(yi)
    nx = S.nvars
    basis = list(_y_monomials(n, j))
    index = {b: k for k, b in enumerate(basis)}
    ytw = tuple(sum(b[k] * A.weights[yi[k]] for k in range(n)) for b in basis)
    cols, stw = [], []
    for g in D.groebner_basis():
        for dy, part in _y_split(A, g).items():
            if dy > j:
                continue
            for b in _y_monomials(n, j - dy):
                col = {}
                for e, c in part.terms.items():
                    be = tuple(e[yi[k]] + b[k] for k in range(n))
                    col[(index[be], e[:nx])] = c
                if col:
                    cols.append(col)
                    stw.append(part.degree() + sum(b[k] * A.weights[yi[k]] for k in range(n)))
    return ModuleMap(GradedFreeModule(S, tuple(stw)), GradedFreeModule(S, ytw), cols)


def depth_y_piece(B: BlowupPresentation, D: Ideal, j: int) -> float:
    """``depth [A/D]_j`` over ``S``; ``+inf`` for the zero module."""
    try:
        return depth_module(y_piece_presentation(B, D, j))
    except ZeroModuleError:
        return float("inf")


def _y_piece_contained(B: BlowupPresentation, C: Ideal, D: Ideal, j: int) -> bool:
    """Is ``C_j`` contained in ``D_j`` (both y-homogeneous ideals of ``A``)?"""
    n = B.n
    yi = B.ring.yindices
    for g in C.gens:
        for dy, part in _y_split(B.ring, g).items():
            if dy > j:
                continue
            for b in _y_monomials(n, j - dy):
                e = [0] * B.ring.nvars
                for k in range(n):
                    e[yi[k]] = b[k]
                if part.mul_term(tuple(e)) not in D:
                    return False
    return True


@dataclass
class FilterRegularResult:
    order: list[int] | None
    basis: list[Polynomial] | None
    initial_forms: list[Polynomial] | None
    condition1: dict = field(default_factory=dict)
    condition2: dict = field(default_factory=dict)
    passed: bool = False
    attempts: list[str] = field(default_factory=list)


def check_condition1(an: Analysis, basis: Sequence[Polynomial], j_range) -> dict:
    """``[(a_1..a_i) : a_{i+1}] meet I^j == (a_1..a_i) I^{j-1}`` per ``(i, j)``."""
    R, S = an.R, an.S
    out = {}
    for i in range(len(basis)):
        ai = Ideal(S, list(basis[:i])) + R.defining
        C = colon(ai, basis[i])
        for j in j_range:
            lhs = intersect(C, an.power(j))
            rhs = R.product(Ideal(S, list(basis[:i])), an.power(j - 1)) if i else R.defining
            out[(i, j)] = lhs == rhs
    return out


def check_condition2(an: Analysis, forms: Sequence[Polynomial], j_range) -> dict:
    """``[(a_1*..a_i*) : a_{i+1}*]_j == (a_1*..a_i*)_j`` inside ``G``, per ``(i, j)``."""
    B = an.blowup
    A = B.ring
    out = {}
    for i in range(len(forms)):
        D = B.g_ideal + Ideal(A, list(forms[:i]))
        C = colon(D, forms[i])
        for j in j_range:
            out[(i, j)] = _y_piece_contained(B, C, D, j)
    return out


def filter_regular_check(an: Analysis, reduction: ReductionData | None = None, rhat: int | None = None,
                         seed: int = 0, max_orders: int = 6, rebasings: int = 3) -> FilterRegularResult:
    """Search for an ordering/rebasing of the reduction basis satisfying both filter-regular conditions.

    Tried in turn: the identity order, other permutations (at most
    ``max_orders``), then ``rebasings`` random invertible recombinations.
    """
    red = reduction or an.reduction
    if rhat is None:
        rhat = an.regularity.value
    s = red.s
    j_range = range(rhat + 1, rhat + s + 3)
    res = FilterRegularResult(None, None, None)
    candidates: list[tuple[str, list[int], list[Polynomial], list | None]] = []
    for k, perm in enumerate(itertools.permutations(range(s))):
        if k >= max_orders:
            break
        mat = [red.coeff_matrix[p] for p in perm] if red.coeff_matrix else None
        candidates.append((f"order {list(perm)}", list(perm), [red.J_gens[p] for p in perm], mat))
    rng = random.Random(seed + 7919)
    p = an.S.p
    for k in range(rebasings):
        M = _random_invertible(rng, s, p)
        basis = [sum((red.J_gens[c].scale(M[r][c]) for c in range(s)), an.S.zero()) for r in range(s)]
        mat = None
        if red.coeff_matrix:
            n = len(red.coeff_matrix[0])
            mat = [[sum(M[r][c] * red.coeff_matrix[c][q] for c in range(s)) % p for q in range(n)]
                   for r in range(s)]
        candidates.append((f"rebasing {k}", list(range(s)), basis, mat))
    for label, order, basis, mat in candidates:
        try:
            forms = an.initial_forms(basis, mat)
        except ValueError as exc:
            res.attempts.append(f"{label}: initial forms unavailable ({exc})")
            continue
        c1 = check_condition1(an, basis, j_range)
        c2 = check_condition2(an, forms, j_range)
        ok = all(c1.values()) and all(c2.values())
        res.attempts.append(f"{label}: condition1={'ok' if all(c1.values()) else 'fail'} "
                            f"condition2={'ok' if all(c2.values()) else 'fail'}")
        if ok:
            res.order, res.basis, res.initial_forms = order, basis, forms
            res.condition1, res.condition2, res.passed = c1, c2, True
            return res
        if not res.condition1:
            res.condition1, res.condition2 = c1, c2
    log.warning("no filter-regular basis found: %s", "; ".join(res.attempts))
    return res


def _random_invertible(rng: random.Random, s: int, p: int) -> list[list[int]]:
    while True:
        M = [[rng.randrange(p) for _ in range(s)] for _ in range(s)]
        if _det_mod(M, p):
            return M


def _det_mod(M, p: int) -> int:
    M = [row[:] for row in M]
    n = len(M)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det = det * M[c][c] % p
        inv = pow(M[c][c], p - 2, p)
        for r in range(c + 1, n):
            f = M[r][c] * inv % p
            M[r] = [(a - f * b) % p for a, b in zip(M[r], M[c])]
    return det % p
