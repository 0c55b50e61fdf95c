"""Run reports: assembly from analyses, JSON/text emission and JSON parsing.

Reports hold JSON-native values only (infinities are the string ``"+inf"``),
so ``parse_report(emit_report(r, "json")) == r`` holds exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

VERSION = "0.1.0"

CAVEATS = (
    "graded model: local rings are replaced by standard-graded quotient rings localized at the "
    "homogeneous maximal ideal; depth, height and reductions are computed for the graded ring",
    "finite field: random coefficients over F_p stand in for the infinite residue field; "
    "genericity (minimal reductions, filter-regular bases) holds only with high probability",
)


def jsonable(x):
    """Infinities to strings, tuples to lists, dict keys to strings."""
    if isinstance(x, float):
        if math.isinf(x):
            return "+inf" if x > 0 else "-inf"
        return int(x) if x.is_integer() else x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


@dataclass
class TheoremEntry:
    id: str
    hypotheses: dict
    t: object
    bound: object
    actual: object
    verdict: str
    tight: bool = False
    notes: list = field(default_factory=list)


@dataclass
class InstanceReport:
    label: str
    ring: str
    ideal: str
    invariants: dict = field(default_factory=dict)
    theorems: list = field(default_factory=list)
    error: str | None = None
    timing_ms: int | None = None


@dataclass
class RunReport:
    version: str = VERSION
    prime: int = 32003
    seed: int = 0
    caveats: list = field(default_factory=lambda: list(CAVEATS))
    instances: list = field(default_factory=list)

    @property
    def has_violation(self) -> bool:
        return any(t.verdict == "VIOLATION" for inst in self.instances for t in inst.theorems)

    @property
    def has_error(self) -> bool:
        return any(inst.error for inst in self.instances)


def theorem_entry(rep) -> TheoremEntry:
    return TheoremEntry(
        id=rep.statement_id,
        hypotheses=dict(rep.hypothesis_checks),
        t=jsonable(rep.t_value),
        bound=jsonable(rep.bound),
        actual=jsonable(rep.actual),
        verdict=rep.verdict,
        tight=rep.tight,
        notes=list(rep.notes),
    )


def invariants_dict(inv, an=None) -> dict:
    red = inv.reduction
    out = {
        "dim": inv.dim_R,
        "depth_R": inv.depth_R,
        "g": inv.g,
        "l": inv.l,
        "deviation": inv.analytic_deviation,
        "r_J": red.r_J,
        "s": red.s,
        "J": [str(f) for f in red.J_gens],
        "reduction_method": red.method,
        "depths": {str(j): d for j, d in sorted(inv.depths_of_powers.items())},
        "depth_G": inv.depth_G,
        "grade_Gplus": inv.grade_Gplus,
        "regularity": {
            "value": inv.regularity.value,
            "status": inv.regularity.status,
            "lower": inv.regularity.lower,
            "upper": inv.regularity.upper,
            "stabilized_at": inv.regularity.stabilized_at,
        },
        "is_CM": inv.is_CM_R,
        "is_equimultiple": inv.is_equimultiple,
    }
    return jsonable(out)


# ---------------------------------------------------------------------------
# emission


def report_to_dict(r: RunReport) -> dict:
    return asdict(r)


def emit_report(r: RunReport, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report_to_dict(r), indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "text":
        return _emit_text(r).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(data: bytes | str) -> RunReport:
    d = json.loads(data)
    insts = []
    for inst in d.get("instances", []):
        inst = dict(inst)
        inst["theorems"] = [TheoremEntry(**t) for t in inst.get("theorems", [])]
        insts.append(InstanceReport(**inst))
    return RunReport(version=d["version"], prime=d["prime"], seed=d["seed"],
                     caveats=list(d["caveats"]), instances=insts)


def _emit_text(r: RunReport) -> str:
    lines = [f"blowup {r.version}  prime={r.prime}  seed={r.seed}"]
    for c in r.caveats:
        lines.append(f"caveat: {c}")
    for inst in r.instances:
        lines.append("")
        lines.append(f"== {inst.label}: {inst.ring}")
        lines.append(f"   I = {inst.ideal}")
        if inst.error:
            lines.append(f"   ERROR: {inst.error}")
            continue
        inv = inst.invariants
        reg = inv["regularity"]
        lines.append(f"   dim R = {inv['dim']}  depth R = {inv['depth_R']}  ht I = {inv['g']}  "
                     f"l = {inv['l']}  deviation = {inv['deviation']}")
        lines.append(f"   J = ({', '.join(inv['J'])})  s = {inv['s']}  r_J = {inv['r_J']}")
        depths = "  ".join(f"{j}:{d}" for j, d in inv["depths"].items())
        lines.append(f"   depth R/I^j  {depths}")
        lines.append(f"   depth G = {inv['depth_G']}  grade G+ = {inv['grade_Gplus']}  "
                     f"reg G = {reg['value']} ({reg['status']})")
        if inst.theorems:
            lines.append(f"   {'statement':<10} {'t':>5} {'bound':>6} {'actual':>6}  verdict")
            for t in inst.theorems:
                tight = " (tight)" if t.tight else ""
                lines.append(f"   {t.id:<10} {_cell(t.t):>5} {_cell(t.bound):>6} {_cell(t.actual):>6}  "
                             f"{t.verdict}{tight}")
        if inst.timing_ms is not None:
            lines.append(f"   time {inst.timing_ms} ms")
    return "\n".join(lines) + "\n"


def _cell(v) -> str:
    return "-" if v is None else str(v)
