"""Presentations of the Rees algebra, associated graded ring and fiber cone.

For ``R = S/K`` and homogeneous ``f_1, ..., f_n`` in ``S`` the extended ring is
``A = S[y_1, ..., y_n]`` with ``deg y_i = deg f_i`` and a second grading by
y-degree.  The Rees ideal ``L`` is the kernel of ``A -> R[t]``,
``y_i -> f_i t``; it is bihomogeneous, so the associated graded ring
``G = A/(L + I A)`` and the fiber cone ``F = A/(L + m A)`` are graded by both
the weight and the y-degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import MonomialOrder, Polynomial, PolyRing
from .groebner import Ideal, QuotientRing, eliminate, krull_dimension
from .homology import cyclic_presentation, standard_count, free_dim

def _y_names(ring: PolyRing, n: int) -> list[str]:
    names = []
    base = "y_"
    k = 1
    while len(names) < n:
        cand = f"{base}{k}"
        if cand not in ring.variables:
            names.append(cand)
        k += 1
    return names


@dataclass
class BlowupPresentation:
    base: QuotientRing
    ideal_gens: tuple[Polynomial, ...]
    ring: PolyRing  # A = S[y]
    rees_ideal: Ideal
    g_ideal: Ideal | None = None
    fiber_ideal: Ideal | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.ideal_gens)

    @property
    def y_indices(self) -> tuple[int, ...]:
        return self.ring.yindices

    @property
    def x_count(self) -> int:
        return self.base.nvars

    def y(self, i: int) -> Polynomial:
        return self.ring.gen(self.ring.yindices[i])

    def lift_x(self, f: Polynomial) -> Polynomial:
        """Image of an element of ``S`` in ``A``."""
        k = self.ring.nvars - f.ring.nvars
        return Polynomial(self.ring, {e + (0,) * k: c for e, c in f.terms.items()})

    def rees_full(self) -> Ideal:
        """Defining ideal of ``R[It]`` as a quotient of ``A`` (equal to ``L``)."""
        return self.rees_ideal

    def g_presentation(self):
        return cyclic_presentation(self.g_ideal, ytwist=True)

    def substitution_check(self) -> bool:
        """Every generator of ``L`` vanishes under ``y_i -> f_i t`` in ``R[t]``."""
        S = self.base.ambient
        images = list(S.gens()) + list(self.ideal_gens)
        for g in self.rees_ideal.gens:
            # bihomogeneous in y: the image is g(x, f) t^j
            if not self.base.is_zero(g.substitute(images, S)):
                return False
        return True

    def is_bihomogeneous(self) -> bool:
        yi = self.ring.yindices
        return all(g.is_homogeneous() and g.is_homogeneous_in(yi) for g in self.rees_ideal.gens)


def rees_ideal(R: QuotientRing, gens: Sequence[Polynomial]) -> BlowupPresentation:
    """Kernel of ``S[y] -> R[t]`` by eliminating ``t`` from ``(y_i - f_i t) + K``."""
    S = R.ambient
    gens = [S(g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    for g in gens:
        if g.is_zero() or not g.is_homogeneous():
            raise ValueError(f"generator {g} must be nonzero and homogeneous")
        if R.is_zero(g):
            raise ValueError(f"generator {g} is zero in the quotient ring")
    n = len(gens)
    ynames = _y_names(S, n)
    degs = [g.degree() for g in gens]
    A = PolyRing(S.variables + tuple(ynames), S.field, "grevlex", S.weights + tuple(degs), yvars=ynames)
    # elimination ring: t, x..., y...; weights make y_i - f_i t homogeneous
    tname = "t_"
    while tname in A.variables:
        tname += "_"
    E = PolyRing((tname,) + A.variables, S.field,
                 MonomialOrder.block((1, "grevlex"), (A.nvars, "grevlex")),
                 (1,) + S.weights + tuple(d + 1 for d in degs))
    t = E.gen(0)
    xs = [E.gen(1 + i) for i in range(S.nvars)]
    ys = [E.gen(1 + S.nvars + i) for i in range(n)]
    lifted = [ys[i] - g.substitute(xs, E) * t for i, g in enumerate(gens)]
    lifted += [k.substitute(xs, E) for k in R.defining.gens]
    elim = eliminate(lifted, E, 1)
    L_gens = [Polynomial(A, {e[1:]: c for e, c in g.terms.items()}) for g in elim]
    L = Ideal(A, L_gens).minimalized() if L_gens else Ideal(A)
    return BlowupPresentation(R, tuple(gens), A, L)


def _with_extra(B: BlowupPresentation, extra: Sequence[Polynomial]) -> Ideal:
    return (B.rees_ideal + Ideal(B.ring, extra)).minimalized()


def assoc_graded(B: BlowupPresentation) -> Ideal:
    """Ideal ``L + I A + K A`` presenting ``G = gr_I(R)`` over ``A``."""
    if B.g_ideal is None:
        extra = [B.lift_x(f) for f in B.ideal_gens] + [B.lift_x(k) for k in B.base.defining.gens]
        B.g_ideal = _with_extra(B, extra)
    return B.g_ideal


def fiber_cone(B: BlowupPresentation) -> Ideal:
    """Ideal ``L + m A + K A`` presenting ``F = G/mG`` over ``A``."""
    if B.fiber_ideal is None:
        S = B.base.ambient
        extra = [B.lift_x(x) for x in S.gens()]
        B.fiber_ideal = _with_extra(B, extra)
    return B.fiber_ideal


def blowup(R: QuotientRing, gens: Sequence[Polynomial]) -> BlowupPresentation:
    B = rees_ideal(R, gens)
    assoc_graded(B)
    fiber_cone(B)
    return B


def fiber_dimension(B: BlowupPresentation) -> int:
    return krull_dimension(fiber_cone(B))


# ---------------------------------------------------------------------------
# Hilbert function of the y-graded pieces


def _count_bigraded(I: Ideal, w: int, j: int) -> int:
    """Standard monomials of ``I``'s GB with weight ``w`` and y-degree ``j``."""
    A = I.ring
    yi = set(A.yindices)
    xs = [i for i in range(A.nvars) if i not in yi]
    ys = list(A.yindices)
    leads = I.leading_exps()
    total = 0
    from .algebra import monomials_of_weight

    ywts = [1] * len(ys)
    for yb in monomials_of_weight(ywts, j):
        yw = sum(b * A.weights[i] for b, i in zip(yb, ys))
        if yw > w:
            continue
        for xb in monomials_of_weight([A.weights[i] for i in xs], w - yw):
            e = [0] * A.nvars
            for b, i in zip(xb, xs):
                e[i] = b
            for b, i in zip(yb, ys):
                e[i] = b
            if not any(all(a <= c for a, c in zip(l, e)) for l in leads):
                total += 1
    return total


def graded_piece_dims(B: BlowupPresentation, j: int, weights: Sequence[int]) -> dict[int, int]:
    G = assoc_graded(B)
    return {w: _count_bigraded(G, w, j) for w in weights}


def power_quotient_dims(R: QuotientRing, I: Ideal, j: int, weights: Sequence[int], powers=None) -> dict[int, int]:
    """``dim_k (I^j / I^{j+1})_w`` from ``R/I^j`` and ``R/I^{j+1}``."""
    Pj = powers(j) if powers else R.power(I, j)
    Pj1 = powers(j + 1) if powers else R.power(I, j + 1)
    out = {}
    S = R.ambient
    for w in weights:
        a = _std(S, Pj, w)
        b = _std(S, Pj1, w)
        out[w] = b - a
    return out


def _std(S: PolyRing, I: Ideal, w: int) -> int:
    if not I.gens:
        return free_dim(S, w)
    return standard_count(I.engine(), 1, (0,), w)


def hilbert_check(B: BlowupPresentation, I: Ideal, j_max: int, w_max: int | None = None,
                  powers=None) -> dict[int, bool]:
    """Compare the y-degree-``j`` piece of ``G`` with ``I^j/I^{j+1}`` weight by weight."""
    R = B.base
    if w_max is None:
        w_max = max(f.degree() for f in B.ideal_gens) * (j_max + 1) + 2
    out = {}
    for j in range(j_max + 1):
        ws = range(0, w_max + 1)
        lhs = graded_piece_dims(B, j, ws)
        rhs = power_quotient_dims(R, I, j, ws, powers)
        out[j] = lhs == rhs
    return out
