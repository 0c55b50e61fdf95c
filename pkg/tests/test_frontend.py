import json
import random
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blowup.cli import main
from blowup.frontend import (
    CorpusConfig,
    RunConfig,
    RunReport,
    SessionError,
    emit_report,
    monomial_corpus,
    parse_report,
    parse_session,
    run_corpus,
    run_session,
)
from blowup.frontend.parser import CheckStmt, IdealDecl, QuotDecl, RingDecl
from blowup.frontend.report import CAVEATS

SESSIONS = Path(__file__).resolve().parent.parent / "sessions"

EQUI = """ring S = poly(p=32003, vars=[x,y,t1,t2]); R = S / ideal(x^3*y);
I = ideal(x*y, t1); check all(R, I, J=ideal(t1));"""


def test_example_session_parses_to_four_statements():
    ast = parse_session(EQUI)
    kinds = [type(s) for s in ast.statements]
    assert kinds == [RingDecl, QuotDecl, IdealDecl, CheckStmt]
    assert ast.statements[0].variables == ("x", "y", "t1", "t2")
    assert ast.statements[3].J == ("t1",)


def test_empty_input():
    assert parse_session("").statements == ()
    assert parse_session("  # only a comment\n").statements == ()


def test_binding_error_points_at_use_site():
    with pytest.raises(SessionError) as info:
        parse_session("ring S = poly(p=7, vars=[x]);\ncheck all(R2, ideal(x));")
    err = info.value
    assert err.kind == "binding"
    assert (err.line, err.column) == (2, 11)
    assert err.hint


@pytest.mark.parametrize("text, line", [
    ("ring S = poly(p=8, vars=[x]);", 1),
    ("ring S = poly(p=7, vars=[x]);\nI = ideal(x +);", 2),
    ("ring S = poly(p=7, vars=[x, x]);", 1),
    ("ring S = poly(p=7, vars=[x]);\nR = S / ideal(x + 1);", 2),
    ("check bogus(R, I);", 1),
    ("corpus monomial(vars=0, maxdeg=3, count=20);", 1),
    ("ring S = poly(p=7, vars=[x])", 1),
])
def test_errors_carry_location_and_hint(text, line):
    with pytest.raises(SessionError) as info:
        parse_session(text)
    assert info.value.line == line
    assert info.value.column >= 1
    assert "\n" not in info.value.hint


def test_parser_totality_on_random_bytes():
    rng = random.Random(0)
    alphabet = b"ringpolyvarsidealcheckall()[]=,;/*^+-0123456789xyz \n#\xff"
    for k in range(10_000):
        n = rng.randint(0, 60)
        if k % 2:
            data = bytes(rng.randrange(256) for _ in range(n))
        else:
            data = bytes(rng.choice(alphabet) for _ in range(n))
        try:
            parse_session(data)
        except SessionError:
            pass


@given(st.text(max_size=80))
def test_parser_totality_on_text(text):
    try:
        parse_session(text)
    except SessionError:
        pass


def test_session_report_for_equimultiple_example():
    report = run_session(parse_session(EQUI), seed=0)
    inst = report.instances[0]
    assert inst.invariants["depth_G"] == 2
    verdicts = {t.id: t.verdict for t in inst.theorems}
    assert verdicts["cor-1.3"] == "EQUALITY"
    assert json.loads(emit_report(report))["instances"][0]["invariants"]["depth_G"] == 2


def test_session_report_for_deviation_one_example():
    report = run_session(parse_session((SESSIONS / "example17.bld").read_bytes()), seed=0)
    inst = report.instances[0]
    assert inst.invariants["depth_G"] == 3
    assert {t.id: t.verdict for t in inst.theorems}["thm-1.5"] == "EQUALITY"


def test_corpus_directive_yields_twenty_reports():
    report = run_session(parse_session((SESSIONS / "corpus.bld").read_bytes()))
    assert len(report.instances) == 20
    assert not report.has_error


def test_empty_report_document():
    out = emit_report(run_session(parse_session("")))
    d = json.loads(out)
    assert d["instances"] == [] and d["caveats"] == list(CAVEATS)


def test_json_schema_keys():
    d = json.loads(emit_report(run_session(parse_session(EQUI))))
    assert {"version", "prime", "seed", "caveats", "instances"} <= set(d)
    inst = d["instances"][0]
    assert {"ring", "ideal", "invariants", "theorems", "timing_ms"} <= set(inst)
    inv = inst["invariants"]
    for key in ("dim", "depth_R", "g", "l", "deviation", "r_J", "s", "depths", "depth_G", "grade_Gplus"):
        assert key in inv
    assert {"value", "status"} <= set(inv["regularity"])
    for t in inst["theorems"]:
        assert {"id", "hypotheses", "t", "bound", "actual", "verdict"} <= set(t)


def test_round_trip_and_text():
    report = run_session(parse_session(EQUI), seed=3)
    assert parse_report(emit_report(report)) == report
    text = emit_report(report, "text").decode()
    assert "cor-1.3" in text and all(c in text for c in CAVEATS)
    empty = RunReport()
    assert parse_report(emit_report(empty)) == empty


def test_corpus_generator_is_seeded():
    cfg = CorpusConfig(vars=3, maxdeg=2, count=5, seed=4)
    assert monomial_corpus(cfg) == monomial_corpus(cfg)
    assert monomial_corpus(cfg) != monomial_corpus(CorpusConfig(vars=3, maxdeg=2, count=5, seed=5))


def test_parallel_corpus_matches_serial():
    ccfg = CorpusConfig(vars=3, maxdeg=2, count=4, seed=2)
    serial = run_corpus(ccfg, RunConfig(seed=2))
    assert run_corpus(ccfg, RunConfig(seed=2, jobs=2)) == serial


def test_cli_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.bld"
    good.write_text(EQUI)
    assert main(["check", str(good), "--json"]) == 0
    capsys.readouterr()
    bad = tmp_path / "bad.bld"
    bad.write_text("ring S = poly(p=7, vars=[x]);\ncheck all(S, J);")
    assert main(["check", str(bad)]) == 1
    assert "line 2" in capsys.readouterr().err
    assert main(["check", str(tmp_path / "missing.bld")]) == 1
    assert main(["check", str(good), "--prime", "12"]) == 1


def test_cli_reports_kernel_error_with_exit_one(tmp_path, capsys):
    # J is not contained in I: the reduction check fails inside the kernel
    f = tmp_path / "k.bld"
    f.write_text("ring S = poly(p=32003, vars=[x,y]); I = ideal(x); check all(S, I, J=ideal(y));")
    assert main(["check", str(f)]) == 1
    assert "ERROR" in capsys.readouterr().out


def test_cli_is_byte_deterministic():
    path = str(SESSIONS / "example14.bld")
    cmd = [sys.executable, "-m", "blowup.cli", "check", path, "--json", "--seed", "42"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
