"""Theorem fuzzing over a seeded monomial corpus: verdict counts per statement.

    python scripts/fuzz_theorems.py --count 50 --vars 4 --maxdeg 3 --seed 1 [--extra-generator]
"""

from __future__ import annotations

import argparse
from collections import Counter

from blowup.algebra import PolyRing
from blowup.frontend import CorpusConfig, monomial_corpus
from blowup.groebner import QuotientRing
from blowup.invariants import Analysis
from blowup.theorems import CHECKERS, run_checks


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--vars", type=int, default=4)
    ap.add_argument("--maxdeg", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--extra-generator", action="store_true",
                    help="use reductions with one generator more than the analytic spread")
    ap.add_argument("--ids", nargs="*", default=list(CHECKERS))
    args = ap.parse_args()
    counts: Counter = Counter()
    regs: Counter = Counter()
    for inst in monomial_corpus(CorpusConfig(args.vars, args.maxdeg, args.count, args.seed)):
        S = PolyRing(inst.variables)
        seed = args.seed * 1_000_003 + inst.index
        an = Analysis(QuotientRing(S, []), list(inst.gens), seed=seed)
        if args.extra_generator:
            an = Analysis(QuotientRing(S, []), list(inst.gens), seed=seed, s=an.ell + 1)
        regs[(an.regularity.status, an.regularity.value - an.reduction.r_J)] += 1
        for rep in run_checks(an, args.ids):
            counts[(rep.statement_id, rep.verdict)] += 1
            if rep.verdict == "VIOLATION":
                print(f"VIOLATION {rep.statement_id} on #{inst.index}: ({', '.join(inst.gens)})")
    for (sid, verdict), c in sorted(counts.items()):
        print(f"{sid:<9} {verdict:<20} {c}")
    print("r_hat - r_J by status:", dict(sorted(regs.items())))


if __name__ == "__main__":
    main()
