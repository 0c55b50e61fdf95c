"""Compare depth via Auslander-Buchsbaum (Schreyer-frame Betti numbers) with
depth via Koszul cohomology on random monomial ideals, and time both.

    python scripts/depth_algorithms.py --count 50 --vars 4 --maxdeg 3 --jmax 3
"""

from __future__ import annotations

import argparse
import time

from blowup.algebra import PolyRing
from blowup.frontend import CorpusConfig, monomial_corpus
from blowup.groebner import Ideal, QuotientRing
from blowup.homology import cyclic_presentation, depth_module, koszul_depth


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--vars", type=int, default=4)
    ap.add_argument("--maxdeg", type=int, default=3)
    ap.add_argument("--jmax", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--mixed", action="store_true", help="allow generators of different degrees")
    args = ap.parse_args()
    cfg = CorpusConfig(args.vars, args.maxdeg, args.count, args.seed, equigenerated=not args.mixed)
    t_ab = t_kz = 0.0
    agree = total = 0
    for inst in monomial_corpus(cfg):
        S = PolyRing(inst.variables)
        R = QuotientRing(S, [])
        I = Ideal(S, [S(g) for g in inst.gens])
        for j in range(1, args.jmax + 1):
            P = cyclic_presentation(R.power(I, j))
            t0 = time.perf_counter()
            a = depth_module(P)
            t1 = time.perf_counter()
            b = koszul_depth(P)
            t2 = time.perf_counter()
            t_ab += t1 - t0
            t_kz += t2 - t1
            total += 1
            agree += a == b
            if a != b:
                print(f"mismatch: #{inst.index} j={j} I=({', '.join(inst.gens)}) AB={a} Koszul={b}")
    print(f"{agree}/{total} agree; Auslander-Buchsbaum {t_ab:.2f}s, Koszul {t_kz:.2f}s")


if __name__ == "__main__":
    main()
