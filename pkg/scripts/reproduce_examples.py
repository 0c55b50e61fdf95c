"""Print the invariants and verdicts of the two worked families and the calibrations.

    python scripts/reproduce_examples.py [--max-n 3]
"""

from __future__ import annotations

import argparse
import time

from blowup.algebra import PolyRing
from blowup.groebner import QuotientRing
from blowup.invariants import Analysis
from blowup.theorems import run_checks


def equimultiple_family(n: int) -> Analysis:
    S = PolyRing(["x", "y"] + [f"t{i}" for i in range(1, n + 1)])
    ts = [f"t{i}" for i in range(1, n)]
    return Analysis(QuotientRing(S, [S("x^3*y")]), ["x*y"] + ts, J_gens=ts)


def deviation_one_family(n: int) -> Analysis:
    S = PolyRing(["x", "y", "z", "w"] + [f"t{i}" for i in range(1, n + 1)])
    ts = [f"t{i}" for i in range(1, n)]
    return Analysis(QuotientRing(S, [S("x^4*y"), S("z*w")]), ["x*y", "z"] + ts,
                    J_gens=["z"] + ts, localization_asserted=True)


def maximal_ideal(d: int) -> Analysis:
    S = PolyRing([f"x{i}" for i in range(1, d + 1)])
    return Analysis(QuotientRing(S, []), list(S.variables))


def show(label: str, an: Analysis) -> None:
    start = time.perf_counter()
    rep = an.report()
    verdicts = run_checks(an)
    elapsed = time.perf_counter() - start
    depths = " ".join(f"{j}:{d}" for j, d in sorted(rep.depths_of_powers.items()))
    print(f"{label:<22} g={rep.g} l={rep.l} r_J={rep.reduction.r_J} depths[{depths}] "
          f"depthG={rep.depth_G} grade={rep.grade_Gplus} reg={rep.regularity.value}({rep.regularity.status}) "
          f"[{elapsed:.1f}s]")
    for v in verdicts:
        tight = " tight" if v.tight else ""
        print(f"    {v.statement_id:<9} bound={v.bound!s:<5} actual={v.actual!s:<5} {v.verdict}{tight}")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=3)
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        show(f"equimultiple n={n}", equimultiple_family(n))
    for n in range(2, args.max_n + 1):
        show(f"deviation one n={n}", deviation_one_family(n))
    for d in range(1, 5):
        show(f"maximal ideal d={d}", maximal_ideal(d))


if __name__ == "__main__":
    main()
