"""Schreyer frames: fast (non-minimal) free resolutions and exact Betti numbers.

Level 1 is a Groebner basis ``h_1..h_N`` of the relation module.  Level
``k+1`` consists of the syzygies obtained by reducing S-pairs of level ``k``
to zero; by Schreyer's theorem they form a Groebner basis of the syzygy
module for the induced order, in which ``m e_i`` compares as the term
``m * lead(h_i)`` one level down, ties broken by the index ``i``.  Only pairs
whose quotient monomial is a minimal generator of
``(lead h_j : lead h_i | j < i)`` are used.

The frame is not minimal, but the graded Betti numbers follow from the
degree-zero parts of its differentials:
``beta_{k,d} = n_{k,d} - rank_d(d_k) - rank_d(d_{k+1})``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from operator import add
from typing import Sequence

from .algebra import Exp, exp_div, exp_lcm
from .groebner import ModuleGB, _mask
from .oracle import rank_mod_p

Term = tuple[int, Exp]


@dataclass
class _Level:
    leads: list[Term]           # lead term of each element, inside the previous level's module
    vecs: list[dict]            # full vectors {(pos, exp): coeff}, monic at the lead
    degrees: list[int]
    ydegrees: list[int] | None
    keys: dict = field(default_factory=dict)


def _lex_desc(e: Exp) -> tuple:
    return tuple(-x for x in e)


class SchreyerFrame:
    def __init__(self, ring, columns: Sequence[dict], twists: Sequence[int],
                 ytwists: Sequence[int] | None = None, max_levels: int | None = None):
        self.ring = ring
        self.p = ring.p
        self.twists = tuple(twists)
        self.ytwists = tuple(ytwists) if ytwists is not None else None
        self.yidx = tuple(getattr(ring, "yindices", ()))
        eng = ModuleGB(ring, len(twists), twists)
        eng.add_generators([c for c in columns if c])
        eng.compute()
        self._nkey0 = eng.nkey
        elems = [g for g in eng.basis if eng.active[g.index]]
        vecs = [g.terms() for g in elems]
        leads = [(g.pos, g.lead) for g in elems]
        self.levels: list[_Level] = []
        lvl = self._make_level(leads, vecs, self.twists, self.ytwists)
        limit = max_levels if max_levels is not None else ring.nvars + 2
        while lvl.vecs:
            self.levels.append(lvl)
            if len(self.levels) > limit:
                raise RuntimeError("Schreyer frame longer than expected")
            lvl = self._next_level(len(self.levels) - 1)

    # ------------------------------------------------------------------
    def _make_level(self, leads, vecs, prev_deg, prev_ydeg) -> _Level:
        order = sorted(range(len(vecs)), key=lambda i: (leads[i][0], _lex_desc(leads[i][1])))
        leads = [leads[i] for i in order]
        vecs = [vecs[i] for i in order]
        wdeg = self.ring.wdeg
        degs = [wdeg(e) + prev_deg[p] for p, e in leads]
        ydegs = None
        if prev_ydeg is not None:
            ydegs = [sum(e[i] for i in self.yidx) + prev_ydeg[p] for p, e in leads]
        return _Level(leads, vecs, degs, ydegs)

    def _key(self, k: int, term: Term) -> tuple:
        """Sort key of a term of ``F_k`` (smaller key = larger term); ``F_0`` uses position-over-term."""
        if k == 0:
            return self._nkey0(term)
        lvl = self.levels[k - 1]
        key = lvl.keys.get(term)
        if key is None:
            l, m = term
            p, e = lvl.leads[l]
            key = self._key(k - 1, (p, tuple(map(add, e, m)))) + (-l,)
            lvl.keys[term] = key
        return key

    def _next_level(self, k: int) -> _Level:
        """Syzygies of level ``k`` (index into ``self.levels``), as vectors of ``F_{k+1}``."""
        lvl = self.levels[k]
        by_pos: dict[int, list[int]] = {}
        for i, (p, _) in enumerate(lvl.leads):
            by_pos.setdefault(p, []).append(i)
        reducers = {p: [(lvl.leads[i][1], _mask(lvl.leads[i][1]), i) for i in idx] for p, idx in by_pos.items()}
        new_leads, new_vecs = [], []
        for p, idx in by_pos.items():
            for a, i in enumerate(idx):
                ei = lvl.leads[i][1]
                quots = {}
                for j in idx[:a]:
                    u = exp_div(exp_lcm(lvl.leads[j][1], ei), ei)
                    quots.setdefault(u, j)
                for u in _minimal_monomials(list(quots)):
                    j = quots[u]
                    v = exp_div(exp_lcm(lvl.leads[j][1], ei), lvl.leads[j][1])
                    syz = self._pair_syzygy(k, i, u, j, v, reducers)
                    new_leads.append((i, u))
                    new_vecs.append(syz)
        ydeg = lvl.ydegrees
        return self._make_level(new_leads, new_vecs, lvl.degrees, ydeg)

    def _pair_syzygy(self, k: int, i: int, u: Exp, j: int, v: Exp, reducers) -> dict:
        lvl = self.levels[k]
        p = self.p
        f: dict = {}
        for (pos, e), c in lvl.vecs[i].items():
            f[(pos, tuple(map(add, e, u)))] = c
        for (pos, e), c in lvl.vecs[j].items():
            m = (pos, tuple(map(add, e, v)))
            val = (f.get(m, 0) - c) % p
            if val:
                f[m] = val
            else:
                f.pop(m, None)
        syz = {(i, u): 1, (j, v): p - 1}
        key = lambda m: self._key(k, m)  # noqa: E731
        heap = [(key(m), m) for m in f]
        heapq.heapify(heap)
        while heap:
            _, m = heapq.heappop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            pos, e = m
            mask = _mask(e)
            hit = None
            for le, lm, l in reducers.get(pos, ()):
                if lm & ~mask:
                    continue
                if all(x <= y for x, y in zip(le, e)):
                    hit = (le, l)
                    break
            if hit is None:
                raise RuntimeError("S-pair did not reduce to zero: input is not a Groebner basis")
            le, l = hit
            q = exp_div(e, le)
            t = (l, q)
            val = (syz.get(t, 0) - c) % p
            if val:
                syz[t] = val
            else:
                syz.pop(t, None)
            for (tp, te), tc in lvl.vecs[l].items():
                mm = (tp, tuple(map(add, te, q)))
                if mm == m:
                    continue
                old = f.get(mm)
                if old is None:
                    f[mm] = (-c * tc) % p
                    heapq.heappush(heap, (key(mm), mm))
                else:
                    val = (old - c * tc) % p
                    if val:
                        f[mm] = val
                    else:
                        del f[mm]
        return syz

    # ------------------------------------------------------------------
    def ranks(self) -> list[int]:
        return [len(self.twists)] + [len(l.vecs) for l in self.levels]

    def _grades(self, k: int) -> list[tuple]:
        """Bidegrees of the basis of ``F_k``."""
        if k == 0:
            if self.ytwists is None:
                return [(d, 0) for d in self.twists]
            return list(zip(self.twists, self.ytwists))
        lvl = self.levels[k - 1]
        if lvl.ydegrees is None:
            return [(d, 0) for d in lvl.degrees]
        return list(zip(lvl.degrees, lvl.ydegrees))

    def _constant_rank(self, k: int) -> dict[tuple, int]:
        """Rank of the degree-zero part of ``d_k : F_k -> F_{k-1}`` per bidegree."""
        if k < 1 or k > len(self.levels):
            return {}
        lvl = self.levels[k - 1]
        zero = self.ring.zero_exp
        grades = self._grades(k)
        blocks: dict[tuple, list[dict]] = {}
        for l, vec in enumerate(lvl.vecs):
            row = {pos: c for (pos, e), c in vec.items() if e == zero}
            if row:
                blocks.setdefault(grades[l], []).append(row)
        return {g: rank_mod_p(rows, self.p) for g, rows in blocks.items()}

    def betti(self) -> dict[tuple[int, int, int], int]:
        """Minimal graded Betti numbers ``{(i, degree, ydegree): beta}``."""
        out: dict[tuple[int, int, int], int] = {}
        nlev = len(self.levels)
        ranks = [self._constant_rank(k) for k in range(nlev + 2)]
        for k in range(nlev + 1):
            counts: dict[tuple, int] = {}
            for g in self._grades(k):
                counts[g] = counts.get(g, 0) + 1
            for g, n in counts.items():
                b = n - ranks[k].get(g, 0) - ranks[k + 1].get(g, 0)
                if b:
                    out[(k, g[0], g[1])] = b
        return out


def _minimal_monomials(monos: list[Exp]) -> list[Exp]:
    out: list[Exp] = []
    for m in sorted(set(monos), key=lambda e: (sum(e), e)):
        if not any(all(a <= b for a, b in zip(k, m)) for k in out):
            out.append(m)
    return out


def frame_betti(presentation) -> dict[tuple[int, int, int], int]:
    M = presentation
    fr = SchreyerFrame(M.ring, M.columns, M.target.twists, M.target.ytwists)
    return fr.betti()
