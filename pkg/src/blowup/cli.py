"""Command-line entry point ``blowup``."""

from __future__ import annotations

import argparse
import logging
import sys

from .frontend import (
    CorpusConfig,
    RunConfig,
    RunReport,
    SessionError,
    emit_report,
    parse_session,
    run_corpus,
    run_session,
)
from .homology import MAX_POWER
from .invariants import R_MAX

EXIT_OK, EXIT_KERNEL, EXIT_VIOLATION = 0, 1, 2


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="blowup", description="Blow-up algebras and depth bounds for G = gr_I(R).")
    sub = ap.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run a .bld session file")
    check.add_argument("file")
    check.add_argument("--json", action="store_true", help="emit JSON instead of text")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--prime", type=int, default=None, help="override the characteristic of every ring")
    check.add_argument("--max-power", type=int, default=MAX_POWER, help="colimit cap for a-invariants")
    check.add_argument("--rmax", type=int, default=R_MAX, help="reduction-number search cap")
    check.add_argument("--timing", action="store_true", help="record wall-clock time (output no longer deterministic)")

    corpus = sub.add_parser("corpus", help="generate and analyse random monomial ideals")
    corpus.add_argument("--vars", type=int, default=3)
    corpus.add_argument("--maxdeg", type=int, default=3)
    corpus.add_argument("--count", type=int, default=20)
    corpus.add_argument("--seed", type=int, default=0)
    corpus.add_argument("--json", action="store_true")
    corpus.add_argument("--timing", action="store_true")
    corpus.add_argument("--jobs", type=int, default=1, help="worker processes (output order is unaffected)")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def _finish(report: RunReport, as_json: bool) -> int:
    sys.stdout.buffer.write(emit_report(report, "json" if as_json else "text"))
    sys.stdout.flush()
    if report.has_violation:
        return EXIT_VIOLATION
    if report.has_error:
        return EXIT_KERNEL
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    if args.command == "check":
        from .algebra import is_prime

        if args.prime is not None and not is_prime(args.prime):
            print(f"error: --prime {args.prime} is not prime", file=sys.stderr)
            return EXIT_KERNEL
        try:
            with open(args.file, "rb") as fh:
                ast = parse_session(fh.read())
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_KERNEL
        except SessionError as exc:
            print(f"{args.file}: {exc}", file=sys.stderr)
            return EXIT_KERNEL
        cfg = RunConfig(args.seed, args.prime, args.max_power, args.rmax, args.timing)
        return _finish(run_session(ast, cfg=cfg), args.json)
    cfg = RunConfig(args.seed, None, MAX_POWER, R_MAX, args.timing, max(1, args.jobs))
    ccfg = CorpusConfig(args.vars, args.maxdeg, args.count, args.seed)
    report = RunReport(seed=args.seed, instances=run_corpus(ccfg, cfg))
    return _finish(report, args.json)


if __name__ == "__main__":
    sys.exit(main())
