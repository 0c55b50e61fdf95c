"""Seeded random monomial ideals for fuzzing the checkers."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..algebra import PolyRing


@dataclass(frozen=True)
class CorpusConfig:
    vars: int = 3
    maxdeg: int = 3
    count: int = 20
    seed: int = 0
    max_gens: int = 4
    equigenerated: bool = True


@dataclass(frozen=True)
class CorpusInstance:
    index: int
    variables: tuple[str, ...]
    gens: tuple[str, ...]


def _monomial_text(variables, exps) -> str:
    parts = []
    for v, e in zip(variables, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def _minimal(monos: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    keep = []
    for m in sorted(set(monos), key=lambda e: (sum(e), e)):
        if not any(all(a <= b for a, b in zip(k, m)) for k in keep):
            keep.append(m)
    return keep


def monomial_corpus(cfg: CorpusConfig) -> list[CorpusInstance]:
    """``cfg.count`` minimally generated monomial ideals in ``k[x1..x_vars]``.

    With ``equigenerated`` all generators of an instance share one degree,
    so random linear combinations of them stay homogeneous.
    """
    rng = random.Random(cfg.seed)
    variables = tuple(f"x{i}" for i in range(1, cfg.vars + 1))
    ring = PolyRing(variables)
    by_degree = {d: list(ring.monomials_of_degree(d)) for d in range(1, cfg.maxdeg + 1)}
    out = []
    for k in range(cfg.count):
        m = rng.randint(1, cfg.max_gens)
        if cfg.equigenerated:
            d = rng.randint(1, cfg.maxdeg)
            pool = by_degree[d]
            picks = rng.sample(pool, min(m, len(pool)))
        else:
            picks = [rng.choice(by_degree[rng.randint(1, cfg.maxdeg)]) for _ in range(m)]
        gens = _minimal(picks)
        out.append(CorpusInstance(k, variables, tuple(_monomial_text(variables, e) for e in gens)))
    return out
