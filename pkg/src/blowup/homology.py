"""Graded free modules, syzygies, minimal free resolutions and Koszul cohomology.

Module elements are vectors ``{(position, exponent): coefficient}`` as in
:mod:`blowup.groebner`.  A :class:`ModuleMap` stores the images of the source
basis vectors (its columns).  Everything here assumes homogeneous data with
respect to the ring weights; a second grading (used for the y-degree of
blow-up algebras) is carried along as ``ytwists`` when requested.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import Exp, Polynomial, PolyRing, monomials_of_weight
from .groebner import Ideal, ModuleGB, Vec, poly_to_vec
from .schreyer import frame_betti

NEG_INF = float("-inf")


class ZeroModuleError(ValueError):
    """Depth of the zero module is undefined."""


class NonHomogeneousError(ValueError):
    pass


# ---------------------------------------------------------------------------
# free modules and maps


@dataclass(frozen=True)
class GradedFreeModule:
    ring: PolyRing
    twists: tuple[int, ...]
    ytwists: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.ytwists is not None and len(self.ytwists) != len(self.twists):
            raise ValueError("ytwists must match twists in length")

    @property
    def rank(self) -> int:
        return len(self.twists)


@dataclass
class ModuleMap:
    source: GradedFreeModule
    target: GradedFreeModule
    columns: list[Vec]

    def __post_init__(self):
        if len(self.columns) != self.source.rank:
            raise ValueError("one column per source basis vector required")

    @property
    def ring(self) -> PolyRing:
        return self.target.ring

    def matrix(self) -> list[list[Polynomial]]:
        """Entries as polynomials, ``target.rank`` rows by ``source.rank`` columns."""
        ring = self.ring
        rows = [[ring.zero() for _ in self.columns] for _ in range(self.target.rank)]
        for j, col in enumerate(self.columns):
            per: dict[int, dict] = {}
            for (pos, e), c in col.items():
                per.setdefault(pos, {})[e] = c
            for pos, terms in per.items():
                rows[pos][j] = Polynomial(ring, terms)
        return rows

    @classmethod
    def from_matrix(cls, ring: PolyRing, rows: Sequence[Sequence[Polynomial]],
                    target_twists: Sequence[int] | None = None) -> "ModuleMap":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        tt = tuple(target_twists) if target_twists is not None else (0,) * nrows
        cols, stw = [], []
        for j in range(ncols):
            col: Vec = {}
            deg = None
            for i in range(nrows):
                f = ring(rows[i][j])
                for e, c in f.terms.items():
                    col[(i, e)] = c
                    d = ring.wdeg(e) + tt[i]
                    if deg is None:
                        deg = d
                    elif d != deg:
                        raise NonHomogeneousError(f"column {j} is not homogeneous")
            cols.append(col)
            stw.append(deg if deg is not None else 0)
        return cls(GradedFreeModule(ring, tuple(stw)), GradedFreeModule(ring, tt), cols)

    def is_homogeneous(self) -> bool:
        ring, tt = self.ring, self.target.twists
        for col, s in zip(self.columns, self.source.twists):
            for (pos, e) in col:
                if ring.wdeg(e) + tt[pos] != s:
                    return False
        return True

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self o other``; ``other.target`` must be ``self.source``."""
        out = []
        for col in other.columns:
            out.append(apply_map(self.ring, self.columns, col))
        return ModuleMap(other.source, self.target, out)


def apply_map(ring: PolyRing, columns: Sequence[Vec], v: Vec) -> Vec:
    p = ring.p
    out: Vec = {}
    for (pos, e), c in v.items():
        for (tp, te), tc in columns[pos].items():
            m = (tp, tuple(a + b for a, b in zip(e, te)))
            val = (out.get(m, 0) + c * tc) % p
            if val:
                out[m] = val
            else:
                out.pop(m, None)
    return out


def vec_degree(ring: PolyRing, v: Vec, twists: Sequence[int]) -> int:
    pos, e = next(iter(v))
    return ring.wdeg(e) + twists[pos]


def vec_ydegree(v: Vec, yidx: Sequence[int], ytwists: Sequence[int]) -> int:
    pos, e = next(iter(v))
    return sum(e[i] for i in yidx) + ytwists[pos]


def shift_vec(v: Vec, offset: int) -> Vec:
    return {(pos + offset, e): c for (pos, e), c in v.items()}


# ---------------------------------------------------------------------------
# syzygies


def minimal_subset(ring: PolyRing, vecs: Sequence[Vec], shifts: Sequence[int]) -> tuple[list[int], ModuleGB]:
    """Indices of a minimal generating subset of homogeneous ``vecs`` and the GB engine."""
    eng = ModuleGB(ring, len(shifts), shifts)
    eng.add_generators(vecs)
    eng.compute()
    if not eng.homogeneous:
        raise NonHomogeneousError("minimal generators need homogeneous input")
    return sorted(eng.minimal_inputs), eng


def kernel_vectors(ring: PolyRing, columns: Sequence[Vec], target_shifts: Sequence[int],
                   source_shifts: Sequence[int], minimal: bool = True) -> list[Vec]:
    """Generators of the kernel of the map with the given columns.

    Uses the tag trick: a GB of ``(c_i, e_i)`` under a position-over-term
    order in which the target positions dominate; elements living purely in
    the tag positions generate the syzygy module.
    """
    r = len(target_shifts)
    m = len(columns)
    if m == 0:
        return []
    eng = ModuleGB(ring, r + m, tuple(target_shifts) + tuple(source_shifts))
    zero = ring.zero_exp
    gens = []
    for i, col in enumerate(columns):
        v = dict(col)
        v[(r + i, zero)] = 1
        gens.append(v)
    eng.add_generators(gens)
    syz = [shift_vec(v, -r) for v in eng.reduced_basis() if eng.lead(v)[0] >= r]
    if not minimal or not syz:
        return syz
    idx, _ = minimal_subset(ring, syz, source_shifts)
    return [syz[i] for i in idx]


def syzygy(M: ModuleMap) -> ModuleMap:
    """Map from a free module onto the kernel of ``M`` (minimal generators)."""
    ring = M.ring
    ker = kernel_vectors(ring, M.columns, M.target.twists, M.source.twists)
    tw = tuple(vec_degree(ring, v, M.source.twists) for v in ker)
    ytw = None
    if M.source.ytwists is not None:
        ytw = tuple(_ydeg_vec(ring, v, M.source.ytwists) for v in ker)
    return ModuleMap(GradedFreeModule(ring, tw, ytw), M.source, ker)


def _yidx(ring: PolyRing) -> tuple[int, ...]:
    return getattr(ring, "yindices", ())


def _ydeg_vec(ring: PolyRing, v: Vec, ytwists: Sequence[int]) -> int:
    return vec_ydegree(v, _yidx(ring), ytwists)


# ---------------------------------------------------------------------------
# resolutions


@dataclass
class FreeResolution:
    """Minimal graded free resolution ``F_0 <- F_1 <- ... <- F_k``.

    ``maps[i]`` is the differential ``F_{i+1} -> F_i``.
    """

    ring: PolyRing
    modules: list[GradedFreeModule]
    maps: list[ModuleMap]

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    @property
    def projective_dimension(self) -> int:
        return self.length

    def betti(self) -> dict[tuple[int, int], int]:
        table: dict[tuple[int, int], int] = {}
        for i, F in enumerate(self.modules):
            for tw in F.twists:
                table[(i, tw)] = table.get((i, tw), 0) + 1
        return table

    def betti_numbers(self) -> list[int]:
        return [F.rank for F in self.modules]

    def max_ytwist_bound(self) -> int | None:
        """``max_i (max y-twist of F_i - i)``, an upper bound for the y-regularity."""
        if any(F.ytwists is None for F in self.modules):
            return None
        vals = [max(F.ytwists) - i for i, F in enumerate(self.modules) if F.rank]
        return max(vals) if vals else None

    def hilbert_function(self, d: int) -> int:
        """``dim_k M_d`` from the Betti table (alternating sum of shifted free modules)."""
        total = 0
        for i, F in enumerate(self.modules):
            s = sum(free_dim(self.ring, d - tw) for tw in F.twists)
            total += -s if i % 2 else s
        return total

    def is_complex(self) -> bool:
        for a, b in zip(self.maps, self.maps[1:]):
            comp = a.compose(b)
            if any(comp.columns):
                return False
        return True

    def is_minimal(self) -> bool:
        zero = self.ring.zero_exp
        return all(e != zero for M in self.maps for col in M.columns for (_, e) in col)


_free_dim_cache: dict = {}


def free_dim(ring: PolyRing, d: int) -> int:
    """``dim_k`` of the degree-``d`` piece of the polynomial ring."""
    if d < 0:
        return 0
    key = (ring.weights, d)
    val = _free_dim_cache.get(key)
    if val is None:
        val = _count_weight(ring.weights, d)
        _free_dim_cache[key] = val
    return val


def _count_weight(weights: Sequence[int], d: int) -> int:
    table = [0] * (d + 1)
    table[0] = 1
    for w in weights:
        for k in range(w, d + 1):
            table[k] += table[k - w]
    return table[d]


def prune_presentation(M: ModuleMap) -> ModuleMap:
    """Eliminate unit entries so that the presentation becomes minimal.

    Each unit entry removes one generator (its row) and one relation (its
    column); the remaining relation columns are redundant-pruned afterwards.
    """
    ring = M.ring
    p = ring.p
    zero = ring.zero_exp
    cols = [dict(c) for c in M.columns]
    rows = list(range(M.target.rank))
    while True:
        hit = None
        for j, col in enumerate(cols):
            for (pos, e), c in col.items():
                if e == zero:
                    hit = (j, pos, c)
                    break
            if hit:
                break
        if hit is None:
            break
        j, r, c = hit
        piv = cols.pop(j)
        inv = pow(c, -1, p)
        new = []
        for col in cols:
            entry = {e: v for (pos, e), v in col.items() if pos == r}
            if entry:
                # col -= entry/c * piv (entry has degree 0 relative to piv)
                for e, v in entry.items():
                    f = v * inv % p
                    for (pp, pe), pc in piv.items():
                        mm = (pp, tuple(a + b for a, b in zip(e, pe)))
                        val = (col.get(mm, 0) - f * pc) % p
                        if val:
                            col[mm] = val
                        else:
                            col.pop(mm, None)
            new.append(col)
        cols = new
        rows.remove(r)
    # renumber remaining rows
    renum = {old: i for i, old in enumerate(rows)}
    cols = [{(renum[pos], e): c for (pos, e), c in col.items()} for col in cols]
    tt = tuple(M.target.twists[r] for r in rows)
    ytt = tuple(M.target.ytwists[r] for r in rows) if M.target.ytwists is not None else None
    target = GradedFreeModule(ring, tt, ytt)
    cols_nz = [c for c in cols if c]
    if cols_nz:
        idx, _ = minimal_subset(ring, cols_nz, tt)
        cols_nz = [cols_nz[i] for i in idx]
    stw = tuple(vec_degree(ring, c, tt) for c in cols_nz)
    sytw = tuple(_ydeg_vec(ring, c, ytt) for c in cols_nz) if ytt is not None else None
    return ModuleMap(GradedFreeModule(ring, stw, sytw), target, cols_nz)


def free_resolution(presentation: ModuleMap, max_length: int | None = None) -> FreeResolution:
    """Minimal graded free resolution of ``coker(presentation)``."""
    if not presentation.is_homogeneous():
        raise NonHomogeneousError("free_resolution needs a homogeneous presentation")
    ring = presentation.ring
    d1 = prune_presentation(presentation)
    modules = [d1.target]
    maps: list[ModuleMap] = []
    if d1.target.rank == 0:
        return FreeResolution(ring, [d1.target], [])
    current = d1
    limit = max_length if max_length is not None else ring.nvars + 1
    while current.source.rank:
        maps.append(current)
        modules.append(current.source)
        if len(maps) > limit:
            raise RuntimeError("resolution longer than the number of variables")
        current = syzygy(current)
    return FreeResolution(ring, modules, maps)


def cyclic_presentation(I: Ideal, ytwist: bool = False) -> ModuleMap:
    """Presentation ``ring^m -> ring`` of ``ring / I`` by minimal generators of ``I``."""
    ring = I.ring
    gens = I.minimal_generators() if I.gens else []
    cols = [poly_to_vec(g) for g in gens]
    tw = tuple(g.degree() for g in gens)
    ytw = None
    tytw = None
    if ytwist:
        yi = _yidx(ring)
        ytw = tuple(sum(g.lead_exp()[i] for i in yi) for g in gens)
        tytw = (0,)
    return ModuleMap(GradedFreeModule(ring, tw, ytw), GradedFreeModule(ring, (0,), tytw), cols)


@dataclass(frozen=True)
class BettiTable:
    """Minimal graded Betti numbers ``{(i, degree, ydegree): beta}`` of a module."""

    ring: PolyRing
    entries: dict

    @property
    def is_zero(self) -> bool:
        return not self.entries

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _, _ in self.entries)

    @property
    def length(self) -> int:
        return self.projective_dimension

    def betti_numbers(self) -> list[int]:
        out = [0] * (self.projective_dimension + 1)
        for (i, _, _), b in self.entries.items():
            out[i] += b
        return out

    def max_ytwist_bound(self) -> int | None:
        """``max_i (max y-degree in homological degree i - i)``."""
        if not self.entries:
            return None
        return max(y - i for i, _, y in self.entries)


def betti_table(presentation: ModuleMap) -> BettiTable:
    """Graded Betti numbers of ``coker(presentation)`` via a Schreyer frame."""
    if not presentation.is_homogeneous():
        raise NonHomogeneousError("betti_table needs a homogeneous presentation")
    return BettiTable(presentation.ring, frame_betti(presentation))


def depth_auslander_buchsbaum(presentation: ModuleMap) -> int:
    """``nvars - pd`` of ``coker(presentation)`` from its graded Betti numbers."""
    table = betti_table(presentation)
    if table.is_zero:
        raise ZeroModuleError("depth of the zero module is undefined")
    return presentation.ring.nvars - table.projective_dimension


def depth_module(presentation: ModuleMap) -> int:
    """Depth of ``coker(presentation)`` over the maximal graded ideal (Auslander-Buchsbaum)."""
    return depth_auslander_buchsbaum(presentation)


def hilbert_numerator(M: ModuleMap) -> dict[int, int]:
    """``K(t)`` with ``HS(coker M) = K(t) / prod(1 - t^w_i)``; zero coefficients dropped."""
    ring = M.ring
    tw = M.target.twists
    eng = ModuleGB(ring, len(tw), tw)
    eng.add_generators([c for c in M.columns if c])
    eng.compute()
    leads: dict[int, list[Exp]] = {}
    for pos, e in eng.leads():
        leads.setdefault(pos, []).append(e)
    total: dict[int, int] = {}
    for pos in range(len(tw)):
        for d, c in monomial_numerator(leads.get(pos, []), ring.weights).items():
            total[d + tw[pos]] = total.get(d + tw[pos], 0) + c
    return {d: c for d, c in sorted(total.items()) if c}


def _minimal_monomials(gens: Iterable[Exp]) -> list[Exp]:
    out: list[Exp] = []
    for m in sorted(set(gens), key=sum):
        if not any(all(a <= b for a, b in zip(k, m)) for k in out):
            out.append(m)
    return out


def monomial_numerator(gens: Sequence[Exp], weights: Sequence[int]) -> dict[int, int]:
    """Numerator of the Hilbert series of ``k[x]/(gens)`` by pivoting on powers of one variable."""
    gens = _minimal_monomials(gens)
    return _numerator(tuple(gens), tuple(weights))


def _poly_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _numerator(gens: tuple, weights: tuple) -> dict[int, int]:
    if not gens:
        return {0: 1}
    supports = [frozenset(i for i, a in enumerate(g) if a) for g in gens]
    if all(not (supports[i] & supports[j]) for i in range(len(gens)) for j in range(i)):
        out = {0: 1}
        for g in gens:
            d = sum(a * w for a, w in zip(g, weights))
            out = _poly_mul(out, {0: 1, d: -1})
        return out
    counts = [0] * len(weights)
    for g, sup in zip(gens, supports):
        if len(sup) > 1:
            for i in sup:
                counts[i] += 1
    x = max(range(len(weights)), key=lambda i: counts[i])
    exps = sorted(g[x] for g in gens if g[x])
    e = exps[(len(exps) - 1) // 2]
    p = tuple(e if i == x else 0 for i in range(len(weights)))
    plus = _minimal_monomials(list(gens) + [p])
    quot = _minimal_monomials(tuple(max(a - b, 0) for a, b in zip(g, p)) for g in gens)
    a = _numerator(tuple(plus), weights)
    b = _numerator(tuple(quot), weights)
    shift = e * weights[x]
    out = dict(a)
    for k, v in b.items():
        out[k + shift] = out.get(k + shift, 0) + v
    return {k: v for k, v in out.items() if v}


def depth_quotient(I: Ideal) -> int:
    return depth_module(cyclic_presentation(I))


# ---------------------------------------------------------------------------
# standard monomial counting


def standard_count(eng: ModuleGB, rank: int, shifts: Sequence[int], d: int) -> int:
    """``dim_k`` of ``(F / U)_d`` where ``eng`` holds a GB of ``U`` inside ``F``."""
    leads: dict[int, list[Exp]] = {}
    for pos, e in eng.leads():
        leads.setdefault(pos, []).append(e)
    ring = eng.ring
    total = 0
    for pos in range(rank):
        ls = leads.get(pos, [])
        for e in monomials_of_weight(ring.weights, d - shifts[pos]):
            if not any(all(a <= b for a, b in zip(l, e)) for l in ls):
                total += 1
    return total


def hilbert_function_direct(presentation: ModuleMap, d: int) -> int:
    ring = presentation.ring
    tw = presentation.target.twists
    eng = ModuleGB(ring, len(tw), tw)
    eng.add_generators(presentation.columns)
    eng.compute()
    return standard_count(eng, len(tw), tw, d)


# ---------------------------------------------------------------------------
# Koszul cohomology


def _sign(j: int, S: Sequence[int]) -> int:
    return -1 if sum(1 for k in S if k < j) % 2 else 1


@dataclass
class KoszulCohomology:
    """``H^i`` of ``Hom(K(f), M)`` presented as ``(Z + B) / B`` inside a free cover."""

    i: int
    ring: PolyRing
    shifts: tuple[int, ...]
    yshifts: tuple[int, ...] | None
    cycles: list[Vec]
    boundary: ModuleGB
    nonzero: bool
    _total: ModuleGB | None = None

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def total_engine(self) -> ModuleGB:
        if self._total is None:
            eng = ModuleGB(self.ring, self.rank, self.shifts)
            eng.add_generators(list(self.boundary.inputs) + list(self.cycles))
            eng.compute()
            self._total = eng
        return self._total

    def graded_dims(self, lo: int, hi: int) -> dict[int, int]:
        """``dim_k H^i_d`` for ``lo <= d <= hi``."""
        out = {}
        tot = self.total_engine()
        for d in range(lo, hi + 1):
            out[d] = (standard_count(self.boundary, self.rank, self.shifts, d)
                      - standard_count(tot, self.rank, self.shifts, d))
        return out

    def top_ydegree(self, yidx: Sequence[int], t: int):
        """Largest y-degree of ``H^i`` when it is killed by ``y_j^t`` for all ``j``."""
        if not self.nonzero:
            return NEG_INF
        n = len(yidx)
        best = NEG_INF
        box = sorted(itertools.product(range(t), repeat=n), key=sum, reverse=True)
        for z in self.cycles:
            if self.boundary.contains(z):
                continue
            zdeg = vec_ydegree(z, yidx, self.yshifts)
            if zdeg + n * (t - 1) <= best:
                continue
            for b in box:
                if zdeg + sum(b) <= best:
                    break
                w = _mul_y(z, yidx, b)
                if not self.boundary.contains(w):
                    best = zdeg + sum(b)
                    break
        return best


def _mul_y(v: Vec, yidx: Sequence[int], b: Sequence[int]) -> Vec:
    out = {}
    for (pos, e), c in v.items():
        e2 = list(e)
        for i, k in zip(yidx, b):
            e2[i] += k
        out[(pos, tuple(e2))] = c
    return out


def koszul_cohomology(elements: Sequence[Polynomial], presentation: ModuleMap, i: int,
                      power: int = 1) -> KoszulCohomology:
    """``H^i(f_1^power, ..., f_n^power; M)`` for ``M = coker(presentation)``.

    The cochain module ``C^i`` is ``M`` tensored with the exterior power
    ``wedge^i`` of ``ring^n``; its free cover has positions ``(S, k)`` for
    ``S`` an ``i``-subset and ``k`` a generator of ``M``.  The vanishing
    verdict is exact: every cycle generator is tested for membership in the
    boundaries plus relations.
    """
    ring = presentation.ring
    n = len(elements)
    fs = [f ** power for f in elements]
    fdeg = [f.degree() for f in fs]
    r = presentation.target.rank
    tw = presentation.target.twists
    ytw = presentation.target.ytwists
    yi = _yidx(ring)
    fydeg = [f.degree_in(yi) if yi else 0 for f in fs]
    if i < 0 or i > n:
        raise ValueError("cohomological degree out of range")

    def layout(k):
        subsets = list(itertools.combinations(range(n), k))
        index = {S: s for s, S in enumerate(subsets)}
        shifts = tuple(tw[a] - sum(fdeg[j] for j in S) for S in subsets for a in range(r))
        ysh = None
        if ytw is not None:
            ysh = tuple(ytw[a] - sum(fydeg[j] for j in S) for S in subsets for a in range(r))
        return subsets, index, shifts, ysh

    def relations(k, index, shifts):
        cols = []
        for s in range(len(index)):
            for col in presentation.columns:
                cols.append({(s * r + pos, e): c for (pos, e), c in col.items()})
        return cols

    def differential(k):
        """Columns of d^k : C^k -> C^(k+1) on the free covers."""
        src, _, _, _ = layout(k)
        _, tindex, _, _ = layout(k + 1)
        cols = []
        p = ring.p
        for S in src:
            for a in range(r):
                col: Vec = {}
                for j in range(n):
                    if j in S:
                        continue
                    T = tuple(sorted(S + (j,)))
                    sgn = _sign(j, S)
                    t = tindex[T]
                    for e, c in fs[j].terms.items():
                        col[(t * r + a, e)] = (sgn * c) % p
                cols.append(col)
        return cols

    subsets, index, shifts, ysh = layout(i)
    # boundaries + relations
    bcols = relations(i, index, shifts)
    if i > 0:
        bcols += [c for c in differential(i - 1) if c]
    beng = ModuleGB(ring, len(shifts), shifts)
    beng.add_generators(bcols)
    beng.compute()
    # cycles
    if i == n:
        zero = ring.zero_exp
        cycles = [{(q, zero): 1} for q in range(len(shifts))]
    else:
        _, tindex, tshifts, _ = layout(i + 1)
        dcols = differential(i)
        rel = relations(i + 1, tindex, tshifts)
        rel_shifts = tuple(vec_degree(ring, c, tshifts) for c in rel)
        ker = kernel_vectors(ring, dcols + rel, tshifts, tuple(shifts) + rel_shifts, minimal=False)
        m = len(shifts)
        cycles = []
        for v in ker:
            w = {(pos, e): c for (pos, e), c in v.items() if pos < m}
            if w:
                cycles.append(w)
    nonzero = any(not beng.contains(z) for z in cycles)
    return KoszulCohomology(i, ring, tuple(shifts), ysh, cycles, beng, nonzero)


def koszul_grade(elements: Sequence[Polynomial], presentation: ModuleMap) -> int | float:
    """Least ``i`` with ``H^i(f; M) != 0``; ``inf`` when all vanish (``M = fM``)."""
    for i in range(len(elements) + 1):
        if koszul_cohomology(elements, presentation, i).nonzero:
            return i
    return float("inf")


def koszul_depth(presentation: ModuleMap) -> int:
    """Depth via the Koszul complex on all variables."""
    ring = presentation.ring
    g = koszul_grade(ring.gens(), presentation)
    if g == float("inf"):
        raise ZeroModuleError("depth of the zero module is undefined")
    return int(g)


# ---------------------------------------------------------------------------
# local cohomology a-invariants


STABLE_RUN = 3
MAX_POWER = 12


@dataclass
class LocalCohomologyData:
    y_vars: tuple[str, ...]
    a_invariants: dict[int, float]
    stabilization_trace: dict[int, dict[int, float]] = field(default_factory=dict)
    status: str = "unresolved"  # exact | unresolved
    stabilized_at: int | None = None
    regularity: float | None = None
    notes: list[str] = field(default_factory=list)


def a_invariants(y_vars: Sequence[int], presentation: ModuleMap, i_range: Iterable[int],
                 window: tuple[float, float] | None = None, max_power: int = MAX_POWER,
                 vanishing: Iterable[int] = ()) -> LocalCohomologyData:
    """Candidate ``a_i`` of ``H^i_{(y)}(M)`` from the direct system ``H^i(y^t; M)``.

    For each ``t`` the candidate is the top y-degree of the Koszul cohomology
    on ``y_1^t, ..., y_n^t`` (shifted so it is the local-cohomology degree).
    Stabilisation is declared once all candidates agree for ``STABLE_RUN``
    consecutive powers and the regularity candidate ``max(a_i + i)`` lies in
    ``window``.  Indices in ``vanishing`` are known to vanish and are not
    computed.
    """
    ring = presentation.ring
    names = tuple(ring.variables[i] for i in y_vars)
    ys = [ring.gen(i) for i in y_vars]
    idx = sorted(set(i_range))
    van = set(vanishing)
    trace: dict[int, dict[int, float]] = {}
    history: list[dict[int, float]] = []
    data = LocalCohomologyData(names, {}, trace)
    for t in range(1, max_power + 1):
        cand: dict[int, float] = {}
        for i in idx:
            if i in van:
                cand[i] = NEG_INF
                continue
            H = koszul_cohomology(ys, presentation, i, power=t)
            cand[i] = H.top_ydegree(y_vars, t)
        trace[t] = cand
        history.append(cand)
        if len(history) >= STABLE_RUN and all(h == cand for h in history[-STABLE_RUN:]):
            reg = max((a + i for i, a in cand.items()), default=NEG_INF)
            if window is None or window[0] <= reg <= window[1]:
                data.a_invariants = dict(cand)
                data.status = "exact"
                run_start = t
                while run_start > 1 and trace[run_start - 1] == cand:
                    run_start -= 1
                data.stabilized_at = run_start
                data.regularity = reg
                return data
            data.notes.append(f"t={t}: stable candidate reg={reg} outside window {window}")
    data.a_invariants = dict(history[-1]) if history else {}
    data.status = "unresolved"
    data.notes.append(f"no stabilisation within t <= {max_power}")
    return data


def regularity_from_a(a: dict[int, float]) -> float:
    return max((v + i for i, v in a.items()), default=NEG_INF)
