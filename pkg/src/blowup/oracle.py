"""Degree-by-degree linear-algebra oracles (no Groebner bases involved).

For homogeneous generators the degree-``d`` part of the submodule they
generate is spanned by the products ``monomial * generator`` of degree ``d``.
Membership and graded dimensions then reduce to ranks of sparse matrices
over ``F_p``.
"""

from __future__ import annotations

from operator import add
from typing import Sequence

from .algebra import Polynomial, PolyRing, monomials_of_weight


def rank_mod_p(rows: Sequence[dict], p: int) -> int:
    """Rank of sparse rows ``{column: value}`` over ``F_p``."""
    return len(_echelon(rows, p))


def _echelon(rows: Sequence[dict], p: int) -> dict:
    pivots: dict = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(r[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in r.items()}
                break
            f = r[col]
            for c, v in piv.items():
                val = (r.get(c, 0) - f * v) % p
                if val:
                    r[c] = val
                else:
                    r.pop(c, None)
    return pivots


def _in_span(pivots: dict, row: dict, p: int) -> bool:
    r = {c: v % p for c, v in row.items() if v % p}
    while r:
        col = min(r)
        piv = pivots.get(col)
        if piv is None:
            return False
        f = r[col]
        for c, v in piv.items():
            val = (r.get(c, 0) - f * v) % p
            if val:
                r[c] = val
            else:
                r.pop(c, None)
    return True


def module_products(ring: PolyRing, columns: Sequence[dict], twists: Sequence[int], d: int) -> list[dict]:
    """All ``m * column`` of degree ``d`` as sparse rows keyed by ``(position, exponent)``."""
    rows = []
    for col in columns:
        if not col:
            continue
        pos, e = next(iter(col))
        cd = ring.wdeg(e) + twists[pos]
        if cd > d:
            continue
        for m in monomials_of_weight(ring.weights, d - cd):
            rows.append({(q, tuple(map(add, te, m))): c for (q, te), c in col.items()})
    return rows


def _poly_rows(gens: Sequence[Polynomial], d: int) -> list[dict]:
    ring = gens[0].ring
    cols = [{(0, e): c for e, c in g.terms.items()} for g in gens if g]
    return module_products(ring, cols, (0,), d)


def macaulay_member(f: Polynomial, gens: Sequence[Polynomial]) -> bool:
    """Is the homogeneous ``f`` in the ideal of the homogeneous ``gens``?"""
    if not f:
        return True
    if not f.is_homogeneous() or any(g and not g.is_homogeneous() for g in gens):
        raise ValueError("the Macaulay-matrix oracle needs homogeneous input")
    gens = [g for g in gens if g]
    if not gens:
        return False
    p = f.ring.p
    pivots = _echelon(_poly_rows(gens, f.degree()), p)
    return _in_span(pivots, {(0, e): c for e, c in f.terms.items()}, p)


def ideal_piece_dim(gens: Sequence[Polynomial], d: int) -> int:
    """``dim_k I_d`` for homogeneous ``gens``."""
    gens = [g for g in gens if g]
    if not gens:
        return 0
    return rank_mod_p(_poly_rows(gens, d), gens[0].ring.p)


def cokernel_dim(ring: PolyRing, columns: Sequence[dict], twists: Sequence[int], d: int) -> int:
    """``dim_k`` of the degree-``d`` part of ``coker(columns)`` in ``ring^rank`` with ``twists``."""
    free = sum(sum(1 for _ in monomials_of_weight(ring.weights, d - t)) for t in twists if d >= t)
    return free - rank_mod_p(module_products(ring, columns, twists, d), ring.p)
