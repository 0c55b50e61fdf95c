"""Shared builders: the two worked examples and maximal-ideal calibrations."""

from __future__ import annotations

import functools

from hypothesis import settings

from blowup.algebra import PolyRing
from blowup.groebner import QuotientRing
from blowup.invariants import Analysis

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def equimultiple_ring(n: int) -> QuotientRing:
    S = PolyRing(["x", "y"] + [f"t{i}" for i in range(1, n + 1)])
    return QuotientRing(S, [S("x^3*y")])


@functools.lru_cache(maxsize=None)
def equimultiple_example(n: int) -> Analysis:
    """k[x, y, t1..tn]/(x^3 y) with I = (xy, t1..t_{n-1}), J = (t1..t_{n-1})."""
    ts = [f"t{i}" for i in range(1, n)]
    return Analysis(equimultiple_ring(n), ["x*y"] + ts, J_gens=ts)


@functools.lru_cache(maxsize=None)
def deviation_one_example(n: int, localization: bool = True) -> Analysis:
    """k[x, y, z, w, t1..tn]/(x^4 y, zw) with I = (xy, z, t1..t_{n-1}), J = (z, t1..t_{n-1})."""
    S = PolyRing(["x", "y", "z", "w"] + [f"t{i}" for i in range(1, n + 1)])
    R = QuotientRing(S, [S("x^4*y"), S("z*w")])
    ts = [f"t{i}" for i in range(1, n)]
    return Analysis(R, ["x*y", "z"] + ts, J_gens=["z"] + ts, localization_asserted=localization)


@functools.lru_cache(maxsize=None)
def maximal(d: int) -> Analysis:
    S = PolyRing([f"x{i}" for i in range(1, d + 1)])
    return Analysis(QuotientRing(S, []), list(S.variables))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.summary_line(n))
