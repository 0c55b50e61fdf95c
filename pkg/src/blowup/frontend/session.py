"""Execute a parsed session and collect a :class:`RunReport`."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..algebra import PolyRing
from ..groebner import QuotientRing, SaturationError
from ..homology import MAX_POWER
from ..invariants import R_MAX, Analysis, NotCohenMacaulay, ReductionError
from ..theorems import CHECKERS, run_checks
from .corpus import CorpusConfig, monomial_corpus
from .parser import CheckStmt, CorpusStmt, IdealDecl, QuotDecl, RingDecl, SessionAST
from .report import InstanceReport, RunReport, invariants_dict, theorem_entry

log = logging.getLogger(__name__)

KERNEL_ERRORS = (ReductionError, NotCohenMacaulay, SaturationError, RuntimeError, ValueError)


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    prime: int | None = None
    max_power: int = MAX_POWER
    r_max: int = R_MAX
    timing: bool = False
    jobs: int = 1


def _ring_text(R: QuotientRing) -> str:
    S = R.ambient
    base = f"F_{S.p}[{', '.join(S.variables)}]"
    if S.weights != (1,) * S.nvars:
        base += f" weights {list(S.weights)}"
    if R.defining.gens:
        base += " / (" + ", ".join(str(g) for g in R.defining.gens) + ")"
    return base


def analyze_instance(label: str, R: QuotientRing, I_gens, J_gens=None, ids=None, seed: int = 0,
                     localization: bool = False, cfg: RunConfig = RunConfig()) -> InstanceReport:
    """Invariants plus theorem verdicts for one ``(R, I, J)``; kernel errors become an error entry."""
    S = R.ambient
    polys = [S(g) for g in I_gens]
    inst = InstanceReport(label, _ring_text(R), "(" + ", ".join(str(g) for g in polys) + ")")
    start = time.perf_counter()
    try:
        an = Analysis(R, polys, J_gens=J_gens, seed=seed, r_max=cfg.r_max,
                      localization_asserted=localization, max_power=cfg.max_power)
        inv = an.report()
        bad = inv.check_invariants()
        if bad:
            raise RuntimeError("invariant inequality failed: " + "; ".join(bad))
        inst.invariants = invariants_dict(inv)
        chosen = list(CHECKERS) if ids is None else ids
        inst.theorems = [theorem_entry(t) for t in run_checks(an, chosen)]
    except KERNEL_ERRORS as exc:
        log.warning("%s: %s", label, exc)
        inst.error = f"{type(exc).__name__}: {exc}"
    if cfg.timing:
        inst.timing_ms = int(1000 * (time.perf_counter() - start))
    return inst


def run_session(ast: SessionAST, seed: int = 0, cfg: RunConfig | None = None) -> RunReport:
    cfg = cfg or RunConfig(seed=seed)
    seed = cfg.seed
    rings: dict[str, PolyRing] = {}
    quotients: dict[str, QuotientRing] = {}
    ideals: dict[str, tuple[str, ...]] = {}
    primes = []
    report = RunReport(seed=seed)
    for k, st in enumerate(ast.statements):
        if isinstance(st, RingDecl):
            p = cfg.prime or st.p
            primes.append(p)
            rings[st.name] = PolyRing(st.variables, p, "grevlex", st.weights)
            quotients[st.name] = QuotientRing(rings[st.name], [])
        elif isinstance(st, QuotDecl):
            S = rings[st.ring]
            quotients[st.name] = QuotientRing(S, [S(g) for g in st.gens])
        elif isinstance(st, IdealDecl):
            ideals[st.name] = st.gens
        elif isinstance(st, CheckStmt):
            R = quotients[st.quotient]
            I = ideals[st.ideal] if isinstance(st.ideal, str) else st.ideal
            J = None
            if st.J is not None:
                J = ideals[st.J] if isinstance(st.J, str) else st.J
            ids = None if st.checker == "all" else [st.checker]
            label = f"line {st.loc.line}: check {st.checker}"
            report.instances.append(analyze_instance(label, R, I, J, ids, seed, st.localization, cfg))
        elif isinstance(st, CorpusStmt):
            report.instances.extend(run_corpus(CorpusConfig(st.vars, st.maxdeg, st.count, st.seed),
                                               cfg, label=f"line {st.loc.line}: corpus"))
    report.prime = cfg.prime or (primes[0] if primes else 32003)
    return report


def _corpus_item(args) -> InstanceReport:
    inst, cfg, label = args
    S = PolyRing(inst.variables, cfg.prime or 32003)
    seed = cfg.seed * 1_000_003 + inst.index
    return analyze_instance(f"{label} #{inst.index}", QuotientRing(S, []), inst.gens, None, None, seed, False, cfg)


def run_corpus(ccfg: CorpusConfig, cfg: RunConfig, label: str = "corpus") -> list[InstanceReport]:
    """Analyse every corpus instance; with ``cfg.jobs > 1`` in worker processes, merged by index."""
    work = [(inst, cfg, label) for inst in monomial_corpus(ccfg)]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(_corpus_item, work))
    return [_corpus_item(w) for w in work]
