"""Buchberger's algorithm over F_p for ideals and submodules of free modules.

The engine works on vectors stored as ``{(position, exponent): coefficient}``;
an ideal is a submodule of the rank-one free module.  Module orders are
position-over-term with position 0 the largest, which is what the syzygy and
elimination tricks in :mod:`blowup.homology` need.

Pairs are selected by the normal strategy (smallest sugar, then smallest lcm)
and pruned with the Gebauer-Moeller criteria.  When every input is
homogeneous the pair queue is processed degree by degree, and the engine
records which inputs were needed; by graded Nakayama those form a minimal
generating set.
"""

from __future__ import annotations

import heapq
import itertools
from operator import add
from typing import Iterable, Sequence

from .algebra import Exp, MonomialOrder, Polynomial, PolyRing, exp_div, exp_lcm

Mon = tuple[int, Exp]  # (position, exponent)
Vec = dict  # Mon -> coefficient

SATURATION_CAP = 50


class SaturationError(RuntimeError):
    pass


def _mask(e: Exp) -> int:
    m = 0
    for i, x in enumerate(e):
        if x:
            m |= 1 << i
    return m


class _Elem:
    __slots__ = ("pos", "lead", "mask", "tail", "sugar", "index")

    def __init__(self, pos, lead, tail, sugar, index):
        self.pos = pos
        self.lead = lead
        self.mask = _mask(lead)
        self.tail = tail  # list of (pos, exp, coeff), lead excluded, leading coefficient is 1
        self.sugar = sugar
        self.index = index

    def terms(self) -> Vec:
        out = {(self.pos, self.lead): 1}
        for p, e, c in self.tail:
            out[(p, e)] = c
        return out


class ModuleGB:
    """Incremental Buchberger engine for a submodule of ``ring^rank``.

    ``shifts`` are the weighted degrees of the basis vectors (twists); they
    enter sugar degrees and homogeneity checks only.
    """

    def __init__(self, ring: PolyRing, rank: int = 1, shifts: Sequence[int] | None = None):
        self.ring = ring
        self.p = ring.p
        self.rank = rank
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank
        if len(self.shifts) != rank:
            raise ValueError("one shift per basis vector required")
        self.basis: list[_Elem] = []
        self.active: list[bool] = []
        self._by_pos: dict[int, list[_Elem]] = {}
        self._pairs: list = []
        self._pair_lcm: dict[tuple[int, int], Exp] = {}
        self._counter = itertools.count()
        self._nkey_cache: dict[Mon, tuple] = {}
        self.minimal_inputs: list[int] = []
        self.inputs: list[Vec] = []
        self.homogeneous = True
        self.stats = {"pairs": 0, "zero_reductions": 0}

    # monomial helpers ------------------------------------------------------
    def nkey(self, m: Mon) -> tuple:
        k = self._nkey_cache.get(m)
        if k is None:
            k = (m[0],) + tuple(-x for x in self.ring.key(m[1]))
            self._nkey_cache[m] = k
        return k

    def mdeg(self, m: Mon) -> int:
        return self.ring.wdeg(m[1]) + self.shifts[m[0]]

    def vec_sugar(self, v: Vec) -> int:
        return max(self.mdeg(m) for m in v)

    def is_homogeneous_vec(self, v: Vec) -> bool:
        return len({self.mdeg(m) for m in v}) <= 1

    def lead(self, v: Vec) -> Mon:
        return min(v, key=self.nkey)

    # reduction -------------------------------------------------------------
    def _divisor(self, m: Mon, mask: int) -> _Elem | None:
        cands = self._by_pos.get(m[0])
        if not cands:
            return None
        e = m[1]
        for g in cands:
            if g.mask & ~mask:
                continue
            le = g.lead
            for a, b in zip(le, e):
                if a > b:
                    break
            else:
                return g
        return None

    def reduce(self, v: Vec, full: bool = True) -> Vec:
        """Normal form of ``v`` with respect to the current basis.

        With ``full=False`` only the leading terms are reduced, which is enough
        for a zero test and much cheaper.
        """
        if not v:
            return {}
        p = self.p
        nkey = self.nkey
        f = dict(v)
        heap = [(nkey(m), m) for m in f]
        heapq.heapify(heap)
        rem: Vec = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            g = self._divisor(m, _mask(m[1]))
            if g is None:
                rem[m] = c
                if not full:
                    rem.update(f)
                    return rem
                continue
            q = exp_div(m[1], g.lead)
            for tp, te, tc in g.tail:
                mm = (tp, tuple(map(add, te, q)))
                old = f.get(mm)
                if old is None:
                    f[mm] = (-c * tc) % p
                    heapq.heappush(heap, (nkey(mm), mm))
                else:
                    val = (old - c * tc) % p
                    if val:
                        f[mm] = val
                    else:
                        del f[mm]
        return rem

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v, full=False)

    # basis maintenance --------------------------------------------------------
    def _make_elem(self, v: Vec, sugar: int) -> _Elem:
        lm = self.lead(v)
        inv = pow(v[lm], -1, self.p)
        p = self.p
        tail = [(m[0], m[1], c * inv % p) for m, c in v.items() if m != lm]
        tail.sort(key=lambda t: self.nkey((t[0], t[1])))
        return _Elem(lm[0], lm[1], tail, sugar, len(self.basis))

    def _spoly(self, a: _Elem, b: _Elem, lcm: Exp) -> Vec:
        p = self.p
        qa = exp_div(lcm, a.lead)
        qb = exp_div(lcm, b.lead)
        out: Vec = {}
        for tp, te, tc in a.tail:
            out[(tp, tuple(map(add, te, qa)))] = tc
        for tp, te, tc in b.tail:
            m = (tp, tuple(map(add, te, qb)))
            val = (out.get(m, 0) - tc) % p
            if val:
                out[m] = val
            else:
                out.pop(m, None)
        return out

    def _push(self, sugar: int, kind: int, lcm_key, payload):
        heapq.heappush(self._pairs, (sugar, kind, lcm_key, next(self._counter), payload))

    def _insert(self, h: _Elem):
        """Gebauer-Moeller update with the new element ``h``."""
        ring = self.ring
        product_ok = self.rank == 1
        same = [g for g in self._by_pos.get(h.pos, []) if self.active[g.index]]
        cand = [(g, exp_lcm(g.lead, h.lead)) for g in same]

        # old pairs (i, j) killed by the chain criterion through h
        dead = []
        for (i, j), lcm in self._pair_lcm.items():
            a, b = self.basis[i], self.basis[j]
            if a.pos != h.pos:
                continue
            if all(x <= y for x, y in zip(h.lead, lcm)):
                if exp_lcm(a.lead, h.lead) != lcm and exp_lcm(b.lead, h.lead) != lcm:
                    dead.append((i, j))
        for k in dead:
            del self._pair_lcm[k]

        # new pairs (g, h): keep one per lcm class, drop those with a proper divisor lcm
        kept = []
        for idx, (g, lcm) in enumerate(cand):
            coprime = product_ok and all(not (x and y) for x, y in zip(g.lead, h.lead))
            if coprime:
                kept.append((g, lcm, True))
                continue
            redundant = False
            for jdx, (g2, lcm2) in enumerate(cand):
                if jdx == idx:
                    continue
                if lcm2 != lcm and all(x <= y for x, y in zip(lcm2, lcm)):
                    redundant = True
                    break
            if not redundant:
                for g2, lcm2, _ in kept:
                    if lcm2 == lcm:
                        redundant = True
                        break
            if not redundant:
                kept.append((g, lcm, False))
        # a class containing a coprime pair needs no pair at all
        coprime_lcms = {lcm for _, lcm, cp in kept if cp}
        for g, lcm, cp in kept:
            if cp or lcm in coprime_lcms:
                continue
            key = (g.index, h.index)
            self._pair_lcm[key] = lcm
            sug = max(g.sugar + ring.wdeg(exp_div(lcm, g.lead)), h.sugar + ring.wdeg(exp_div(lcm, h.lead)))
            self._push(sug, 0, ring.key(lcm), key)

        for g in same:
            if all(x <= y for x, y in zip(h.lead, g.lead)):
                self.active[g.index] = False
        self.basis.append(h)
        self.active.append(True)
        lst = [g for g in self._by_pos.get(h.pos, []) if self.active[g.index]]
        lst.append(h)
        self._by_pos[h.pos] = lst

    # public API -------------------------------------------------------------
    def add_generators(self, vecs: Iterable[Vec]):
        for v in vecs:
            v = {m: c % self.p for m, c in v.items() if c % self.p}
            idx = len(self.inputs)
            self.inputs.append(v)
            if not v:
                continue
            if not self.is_homogeneous_vec(v):
                self.homogeneous = False
            lm = self.lead(v)
            self._push(self.vec_sugar(v), 1, self.ring.key(lm[1]), idx)

    def compute(self, degree_bound: int | None = None):
        while self._pairs:
            sugar, kind, _, _, payload = self._pairs[0]
            if degree_bound is not None and sugar > degree_bound:
                break
            heapq.heappop(self._pairs)
            if kind == 0:
                if payload not in self._pair_lcm:
                    continue
                lcm = self._pair_lcm.pop(payload)
                a, b = self.basis[payload[0]], self.basis[payload[1]]
                self.stats["pairs"] += 1
                v = self._spoly(a, b, lcm)
            else:
                v = self.inputs[payload]
            r = self.reduce(v)
            if not r:
                if kind == 0:
                    self.stats["zero_reductions"] += 1
                continue
            if kind == 1:
                self.minimal_inputs.append(payload)
            self._insert(self._make_elem(r, sugar))
        return self

    def reduced_basis(self) -> list[Vec]:
        """Interreduced, monic basis sorted by decreasing leading term."""
        self.compute()
        keep = [g for g in self.basis if self.active[g.index]]
        # rebuild reducers from the minimal leads only
        self._by_pos = {}
        for g in keep:
            self._by_pos.setdefault(g.pos, []).append(g)
        out = []
        for g in keep:
            tail = {(tp, te): tc for tp, te, tc in g.tail}
            red = self.reduce(tail)
            red[(g.pos, g.lead)] = 1
            out.append(red)
        # install the reduced tails so later reductions produce unique remainders
        new = []
        for g, v in zip(keep, out):
            lm = (g.pos, g.lead)
            tail = [(m[0], m[1], c) for m, c in v.items() if m != lm]
            tail.sort(key=lambda t: self.nkey((t[0], t[1])))
            g.tail = tail
            new.append(g)
        out.sort(key=lambda v: self.nkey(self.lead(v)))
        return out

    def leads(self) -> list[Mon]:
        self.compute()
        return [(g.pos, g.lead) for g in self.basis if self.active[g.index]]


# ---------------------------------------------------------------------------
# conversion helpers


def poly_to_vec(f: Polynomial, pos: int = 0) -> Vec:
    return {(pos, e): c for e, c in f.terms.items()}


def vec_to_poly(ring: PolyRing, v: Vec) -> Polynomial:
    return Polynomial(ring, {e: c for (_, e), c in v.items()})


def exact_divide(h: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient ``h / g``; raises if ``g`` does not divide ``h``."""
    ring = h.ring
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    ge = g.lead_exp()
    gc_inv = ring.field.inv(g.lead_coeff())
    q = ring.zero()
    r = h
    while r:
        re_ = r.lead_exp()
        if not all(a <= b for a, b in zip(ge, re_)):
            raise ValueError("polynomial division is not exact")
        t = ring.monomial(exp_div(re_, ge), r.lead_coeff() * gc_inv)
        q = q + t
        r = r - t * g
    return q


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """Ideal of a polynomial ring given by generators; the reduced GB is cached."""

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial | int | str] = ()):
        self.ring = ring
        gl = []
        for g in gens:
            g = ring(g)
            if g:
                gl.append(g)
        self.gens: tuple[Polynomial, ...] = tuple(gl)
        self._engine: ModuleGB | None = None
        self._gb: list[Polynomial] | None = None

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens)) or '0'})"

    # Groebner data ---------------------------------------------------------
    def engine(self) -> ModuleGB:
        if self._engine is None:
            eng = ModuleGB(self.ring)
            eng.add_generators(poly_to_vec(g) for g in self.gens)
            eng.reduced_basis()
            self._engine = eng
        return self._engine

    def groebner_basis(self) -> list[Polynomial]:
        if self._gb is None:
            self._gb = [vec_to_poly(self.ring, v) for v in self.engine().reduced_basis()]
        return self._gb

    gb = groebner_basis

    def normal_form(self, f: Polynomial) -> Polynomial:
        f = self.ring(f)
        return vec_to_poly(self.ring, self.engine().reduce(poly_to_vec(f)))

    def contains(self, f) -> bool:
        f = self.ring(f)
        return not self.engine().reduce(poly_to_vec(f), full=False)

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    def __le__(self, other: "Ideal") -> bool:
        return other.contains_ideal(self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        self._check(other)
        return _gb_key(self) == _gb_key(other)

    def __hash__(self):
        return hash(_gb_key(self))

    def _check(self, other: "Ideal"):
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.groebner_basis())

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def leading_exps(self) -> list[Exp]:
        return [g.lead_exp() for g in self.groebner_basis()]

    # ideal arithmetic ------------------------------------------------------
    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def __pow__(self, j: int) -> "Ideal":
        return self.power(j)

    def power(self, j: int) -> "Ideal":
        if j < 0:
            raise ValueError("negative power")
        result = Ideal(self.ring, [1])
        for _ in range(j):
            result = (result * self).minimalized()
        return result

    def minimalized(self) -> "Ideal":
        """Same ideal with a minimal (homogeneous) or inter-reduced generating set."""
        if not self.gens:
            return self
        if self.is_homogeneous():
            eng = ModuleGB(self.ring)
            eng.add_generators(poly_to_vec(g) for g in self.gens)
            eng.compute()
            out = Ideal(self.ring, [self.gens[i] for i in sorted(eng.minimal_inputs)])
            eng.reduced_basis()
            out._engine = eng
            return out
        return Ideal(self.ring, self.groebner_basis())

    def minimal_generators(self) -> list[Polynomial]:
        if not self.is_homogeneous():
            raise ValueError("minimal generators are defined for homogeneous ideals")
        return list(self.minimalized().gens)

    def intersect(self, other: "Ideal") -> "Ideal":
        return intersect(self, other)

    def quotient(self, other: "Ideal | Polynomial") -> "Ideal":
        return colon(self, other)

    def saturate(self, f: Polynomial) -> "Ideal":
        return saturate(self, f)

    def dimension(self) -> int:
        return krull_dimension(self)

    def extend(self, ring: PolyRing, images: Sequence[Polynomial] | None = None) -> "Ideal":
        """Image in ``ring``; by default variables are matched by name."""
        if images is None:
            images = [ring.gen(v) for v in self.ring.variables]
        return Ideal(ring, [g.substitute(images, ring) for g in self.gens])


def _gb_key(I: Ideal):
    return tuple(sorted(tuple(sorted(g.terms.items())) for g in I.groebner_basis()))


def groebner_basis(I: Ideal) -> list[Polynomial]:
    return I.groebner_basis()


def normal_form(f: Polynomial, I: Ideal) -> Polynomial:
    if f.ring != I.ring:
        raise ValueError("ring mismatch")
    return I.normal_form(f)


def ideal_ops(I: Ideal, J: Ideal | None, op: str, j: int | None = None) -> Ideal:
    if op == "sum":
        return I + J
    if op == "product":
        return I * J
    if op == "power":
        return I.power(j)
    raise ValueError(f"unknown ideal operation {op!r}")


# ---------------------------------------------------------------------------
# elimination, intersection, colon, saturation


def elimination_ring(ring: PolyRing, names: Sequence[str], weights: Sequence[int] | None = None) -> PolyRing:
    """``ring`` with new variables prepended in an eliminating block."""
    weights = tuple(weights) if weights is not None else (1,) * len(names)
    if ring.order.kind == "block":
        rest = ring.order.blocks
    else:
        rest = ((ring.nvars, ring.order.kind),)
    order = MonomialOrder.block((len(names), "grevlex"), *rest)
    return PolyRing(tuple(names) + ring.variables, ring.field, order, weights + ring.weights)


def _fresh_names(ring: PolyRing, base: str, k: int) -> list[str]:
    names = []
    i = 0
    while len(names) < k:
        cand = f"{base}{i}"
        if cand not in ring.variables:
            names.append(cand)
        i += 1
    return names


def eliminate(gens: Sequence[Polynomial], ring: PolyRing, k: int) -> list[Polynomial]:
    """GB elements of ``(gens)`` free of the first ``k`` variables of ``ring``.

    ``ring`` must use a block order whose first block is exactly those ``k``
    variables.  Returned polynomials still live in ``ring``.
    """
    I = Ideal(ring, gens)
    return [g for g in I.groebner_basis() if all(not any(e[:k]) for e in g.terms)]


def _drop_vars(f: Polynomial, k: int, target: PolyRing) -> Polynomial:
    return Polynomial(target, {e[k:]: c for e, c in f.terms.items()})


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I`` and ``J`` intersected, by eliminating ``t`` from ``t I + (1 - t) J``."""
    I._check(J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    T = elimination_ring(ring, _fresh_names(ring, "tag", 1))
    t = T.gen(0)
    lift = [T.gen(i + 1) for i in range(ring.nvars)]
    gens = [t * f.substitute(lift, T) for f in I.gens]
    gens += [(1 - t) * g.substitute(lift, T) for g in J.gens]
    out = Ideal(ring, [_drop_vars(g, 1, ring) for g in eliminate(gens, T, 1)])
    if I.is_homogeneous() and J.is_homogeneous():
        out = out.minimalized()
    return out


def colon(I: Ideal, J: "Ideal | Polynomial") -> Ideal:
    """``I : J``; for a polynomial ``f``, ``I : (f)``."""
    ring = I.ring
    if isinstance(J, Polynomial):
        J = Ideal(ring, [J])
    I._check(J)
    if J.is_zero():
        return Ideal(ring, [1])
    result = None
    for f in J.gens:
        inter = intersect(I, Ideal(ring, [f]))
        part = Ideal(ring, [exact_divide(h, f) for h in inter.gens])
        result = part if result is None else intersect(result, part)
    return result


def saturate(I: Ideal, f: "Polynomial | Ideal", cap: int = SATURATION_CAP) -> Ideal:
    """``I : f^infinity``, iterating colons until two consecutive steps agree."""
    current = I
    for _ in range(cap):
        nxt = colon(current, f)
        if nxt == current:
            return current
        current = nxt
    raise SaturationError(f"saturation did not stabilise within {cap} colon steps")


# ---------------------------------------------------------------------------
# dimension


def independent_dimension(leads: Sequence[Exp], nvars: int) -> int:
    """Largest size of a variable set containing the support of no leading monomial."""
    masks = {_mask(e) for e in leads}
    if 0 in masks:
        return -1
    masks = list(masks)
    for size in range(nvars, -1, -1):
        for combo in itertools.combinations(range(nvars), size):
            u = 0
            for i in combo:
                u |= 1 << i
            if all(m & ~u for m in masks):
                return size
    return 0


def krull_dimension(obj: "Ideal | QuotientRing") -> int:
    """Krull dimension of ``ring / I`` (``-1`` for the unit ideal)."""
    I = obj.defining if isinstance(obj, QuotientRing) else obj
    return independent_dimension(I.leading_exps(), I.ring.nvars)


# ---------------------------------------------------------------------------
# quotient rings


class QuotientRing:
    """``S / K`` for a homogeneous ideal ``K``; ideals of it are lifted to ``S``."""

    def __init__(self, ambient: PolyRing, defining: Ideal | Sequence[Polynomial] = ()):
        if not isinstance(defining, Ideal):
            defining = Ideal(ambient, defining)
        if defining.ring != ambient:
            raise ValueError("defining ideal lives in another ring")
        if not defining.is_homogeneous():
            raise ValueError("defining ideal must be homogeneous")
        self.ambient = ambient
        self.defining = defining

    def __repr__(self):
        return f"QuotientRing({self.ambient!r} / {self.defining!r})"

    @property
    def nvars(self) -> int:
        return self.ambient.nvars

    def ideal(self, gens: Iterable[Polynomial | str | int]) -> Ideal:
        """Lift of the ideal generated by ``gens`` (always contains the defining ideal)."""
        return Ideal(self.ambient, [self.ambient(g) for g in gens] + list(self.defining.gens))

    def lift(self, I: Ideal) -> Ideal:
        return I + self.defining

    def power(self, I: Ideal, j: int) -> Ideal:
        own = [g for g in I.gens if g not in self.defining]
        base = Ideal(self.ambient, own)
        return (base.power(j) + self.defining).minimalized()

    def product(self, I: Ideal, J: Ideal) -> Ideal:
        return (I * J + self.defining).minimalized()

    def dimension(self) -> int:
        return krull_dimension(self.defining)

    def is_zero(self, f: Polynomial) -> bool:
        return f in self.defining

    def maximal_ideal(self) -> Ideal:
        return self.ideal(self.ambient.gens())
