"""Parser for ``.bld`` session files.

Grammar::

    session    := stmt*
    stmt       := (ringdecl | quotdecl | idealdecl | checkstmt | corpusstmt) ';'
    ringdecl   := 'ring' NAME '=' 'poly' '(' option (',' option)* ')'
    quotdecl   := NAME '=' NAME '/' idealexpr
    idealdecl  := NAME '=' idealexpr
    idealexpr  := 'ideal' '(' [poly (',' poly)*] ')'
    checkstmt  := 'check' CHECKER '(' NAME ',' (NAME | idealexpr) (',' NAME '=' value)* ')'
    corpusstmt := 'corpus' 'monomial' '(' option (',' option)* ')'

Ring options are ``p``, ``vars`` and ``weights``; check options are ``J``
(a name or an ``ideal(...)``) and ``localization`` (``true``/``false``).
Names are bound in order: a check may only use rings, quotients and ideals
declared above it.  Every error carries a line, a column and a repair hint.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..algebra import PolynomialSyntaxError, PolyRing, is_prime, parse_polynomial, weighted_degree

KEYWORDS = {"ring", "poly", "ideal", "check", "corpus"}
CHECK_IDS = ("all", "thm-1.1a", "thm-1.1b", "rem-1.2", "cor-1.3", "thm-1.5",
             "prop-1.8", "rem-1.9", "thm-2.5", "lem-2.2", "lem-2.3")
CORPUS_KINDS = ("monomial",)
MAX_VARS = 64

_IDENT = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
_CHECKER = re.compile(r"[a-zA-Z][a-zA-Z0-9_.\-]*")
_INT = re.compile(r"-?[0-9]+")


class SessionError(ValueError):
    """Lexical, syntactic or binding error at a source location."""

    def __init__(self, kind: str, message: str, line: int, column: int, hint: str):
        super().__init__(f"{kind} error at line {line}, column {column}: {message}\n  hint: {hint}")
        self.kind = kind
        self.message = message
        self.line = line
        self.column = column
        self.hint = hint


@dataclass(frozen=True)
class Loc:
    line: int
    column: int


@dataclass(frozen=True)
class RingDecl:
    name: str
    p: int
    variables: tuple[str, ...]
    weights: tuple[int, ...] | None
    loc: Loc = field(compare=False)


@dataclass(frozen=True)
class QuotDecl:
    name: str
    ring: str
    gens: tuple[str, ...]
    loc: Loc = field(compare=False)


@dataclass(frozen=True)
class IdealDecl:
    name: str
    ring: str
    gens: tuple[str, ...]
    loc: Loc = field(compare=False)


@dataclass(frozen=True)
class CheckStmt:
    checker: str
    quotient: str
    ideal: str | tuple[str, ...]
    J: str | tuple[str, ...] | None
    localization: bool
    loc: Loc = field(compare=False)


@dataclass(frozen=True)
class CorpusStmt:
    kind: str
    vars: int
    maxdeg: int
    count: int
    seed: int
    loc: Loc = field(compare=False)


@dataclass(frozen=True)
class SessionAST:
    statements: tuple = ()

    def __len__(self):
        return len(self.statements)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        # binding environment: name -> (kind, ring name)
        self.env: dict[str, tuple[str, str]] = {}
        self.rings: dict[str, PolyRing] = {}
        self.current_ring: str | None = None

    # location helpers ---------------------------------------------------------
    def loc(self, pos: int | None = None) -> Loc:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return Loc(line, col)

    def error(self, kind: str, message: str, hint: str, pos: int | None = None):
        loc = self.loc(pos)
        raise SessionError(kind, message, loc.line, loc.column, hint)

    # scanning -------------------------------------------------------------------
    def skip(self):
        text = self.text
        while self.pos < len(text):
            c = text[self.pos]
            if c.isspace():
                self.pos += 1
            elif c == "#" or text.startswith("//", self.pos):
                nl = text.find("\n", self.pos)
                self.pos = len(text) if nl < 0 else nl + 1
            else:
                break

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str, hint: str):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            self.error("syntax", f"expected {ch!r}, found {got!r}", hint)
        self.pos += 1

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def match(self, pattern: re.Pattern, what: str, hint: str) -> tuple[str, int]:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m:
            got = self.text[self.pos:self.pos + 1] or "end of input"
            kind = "lexical" if got != "end of input" and not (got.isalnum() or got in "_;,()[]=/") else "syntax"
            self.error(kind, f"expected {what}, found {got!r}", hint)
        start = self.pos
        self.pos = m.end()
        return m.group(0), start

    def ident(self, hint: str) -> tuple[str, int]:
        return self.match(_IDENT, "an identifier", hint)

    def keyword(self, word: str, hint: str):
        name, start = self.ident(hint)
        if name != word:
            self.error("syntax", f"expected {word!r}, found {name!r}", hint, start)

    def integer(self, hint: str) -> int:
        tok, start = self.match(_INT, "an integer", hint)
        if len(tok.lstrip("-")) > 30:
            self.error("syntax", "integer literal too long", "use a value below 10^30", start)
        return int(tok)

    def polytext(self) -> tuple[str, int]:
        """Raw polynomial text up to a top-level ',' or ')'."""
        self.skip()
        start = self.pos
        depth = 0
        text = self.text
        while self.pos < len(text):
            c = text[self.pos]
            if c == "(":
                depth += 1
            elif c == ")":
                if depth == 0:
                    break
                depth -= 1
            elif c == "," and depth == 0:
                break
            elif c == ";" and depth == 0:
                break
            self.pos += 1
        if self.pos >= len(text) or text[self.pos] == ";":
            self.error("syntax", "unterminated polynomial list", "close the list with ')'")
        return text[start:self.pos].strip(), start

    # statements -------------------------------------------------------------------
    def session(self) -> SessionAST:
        stmts = []
        while not self.at_end():
            stmts.append(self.statement())
        return SessionAST(tuple(stmts))

    def statement(self):
        word, wpos = self.ident("statements start with 'ring', 'check', 'corpus' or a name followed by '='")
        loc = self.loc(wpos)
        if word == "ring":
            st = self.ringdecl(loc)
        elif word == "check":
            st = self.checkstmt(loc)
        elif word == "corpus":
            st = self.corpusstmt(loc)
        elif word in KEYWORDS:
            self.error("syntax", f"{word!r} cannot start a statement",
                       "statements start with 'ring', 'check', 'corpus' or a name followed by '='", wpos)
        else:
            st = self.assignment(word, wpos, loc)
        self.expect(";", "terminate every statement with ';'")
        return st

    def define(self, name: str, pos: int, kind: str, ring: str):
        if name in KEYWORDS:
            self.error("binding", f"{name!r} is a reserved word", "choose another name", pos)
        if name in self.env:
            self.error("binding", f"name {name!r} is already defined", "choose a fresh name", pos)
        self.env[name] = (kind, ring)

    def ringdecl(self, loc: Loc) -> RingDecl:
        name, npos = self.ident("write 'ring NAME = poly(p=32003, vars=[x,y])'")
        self.expect("=", "write 'ring NAME = poly(...)'")
        self.keyword("poly", "write 'ring NAME = poly(p=32003, vars=[x,y])'")
        self.expect("(", "write 'poly(p=32003, vars=[x,y])'")
        p, variables, weights = 32003, None, None
        seen = set()
        while True:
            key, kpos = self.ident("ring options are p=, vars= and weights=")
            if key in seen:
                self.error("syntax", f"option {key!r} given twice", "give each option once", kpos)
            seen.add(key)
            self.expect("=", f"write '{key}=...'")
            if key == "p":
                ppos = self.pos
                p = self.integer("p must be a prime integer such as 32003")
                if p < 2 or p > 2 ** 31 or not is_prime(p):
                    self.error("binding", f"p = {p} is not a prime below 2^31", "use a prime such as 32003", ppos)
            elif key == "vars":
                variables = self.namelist(kpos)
            elif key == "weights":
                weights = self.intlist()
            else:
                self.error("syntax", f"unknown ring option {key!r}", "ring options are p=, vars= and weights=", kpos)
            if not self.accept(","):
                break
        self.expect(")", "close the option list with ')'")
        if variables is None:
            self.error("syntax", "ring needs a variable list", "add vars=[x, y, ...]")
        if weights is not None:
            if len(weights) != len(variables):
                self.error("binding", "weights and vars differ in length", "give one weight per variable")
            if any(w <= 0 for w in weights):
                self.error("binding", "weights must be positive", "use positive integer weights")
        self.define(name, npos, "ring", name)
        self.rings[name] = PolyRing(variables, p, "grevlex", weights)
        self.current_ring = name
        return RingDecl(name, p, tuple(variables), tuple(weights) if weights else None, loc)

    def namelist(self, pos: int) -> list[str]:
        self.expect("[", "write vars=[x, y, ...]")
        names = []
        if not self.accept("]"):
            while True:
                n, npos = self.ident("variables are identifiers such as x or t1")
                if n in names:
                    self.error("binding", f"variable {n!r} repeated", "list each variable once", npos)
                names.append(n)
                if not self.accept(","):
                    break
            self.expect("]", "close the variable list with ']'")
        if not names:
            self.error("binding", "empty variable list", "declare at least one variable", pos)
        if len(names) > MAX_VARS:
            self.error("binding", f"more than {MAX_VARS} variables", "use fewer variables", pos)
        return names

    def intlist(self) -> list[int]:
        self.expect("[", "write weights=[1, 1, ...]")
        vals = []
        if not self.accept("]"):
            while True:
                vals.append(self.integer("weights are positive integers"))
                if not self.accept(","):
                    break
            self.expect("]", "close the weight list with ']'")
        return vals

    def idealexpr(self, ring: str, require_homogeneous: bool = True) -> tuple[str, ...]:
        self.keyword("ideal", "write ideal(f1, f2, ...)")
        self.expect("(", "write ideal(f1, f2, ...)")
        gens = []
        R = self.rings[ring]
        if not self.accept(")"):
            while True:
                text, start = self.polytext()
                try:
                    f = parse_polynomial(R, text)
                except PolynomialSyntaxError as exc:
                    msg = str(exc).split(" (at offset")[0]
                    hint = ("declare the variable in the ring" if "unknown variable" in msg
                            else "polynomials use +, -, *, ^ and parentheses")
                    self.error("syntax", msg, hint, start + exc.offset)
                if require_homogeneous and not weighted_degree(f)[1]:
                    self.error("binding", f"polynomial {text!r} is not homogeneous",
                               "use homogeneous generators (graded model)", start)
                gens.append(text)
                if not self.accept(","):
                    break
            self.expect(")", "close the generator list with ')'")
        return tuple(gens)

    def assignment(self, name: str, npos: int, loc: Loc):
        self.expect("=", "write 'NAME = ideal(...)' or 'NAME = RING / ideal(...)'")
        rhs, rpos = self.ident("write 'NAME = ideal(...)' or 'NAME = RING / ideal(...)'")
        if rhs == "ideal":
            if self.current_ring is None:
                self.error("binding", "ideal declared before any ring", "declare a ring first", rpos)
            self.pos = rpos
            gens = self.idealexpr(self.current_ring)
            if not gens:
                self.error("binding", "ideal needs at least one generator", "list generators inside ideal(...)", rpos)
            self.define(name, npos, "ideal", self.current_ring)
            return IdealDecl(name, self.current_ring, gens, loc)
        if rhs not in self.env:
            self.error("binding", f"undefined name {rhs!r}", "declare the ring before using it", rpos)
        kind, _ = self.env[rhs]
        if kind != "ring":
            self.error("binding", f"{rhs!r} is a {kind}, not a polynomial ring", "quotient a ring declared with 'ring'", rpos)
        self.expect("/", "write 'NAME = RING / ideal(...)'")
        self.current_ring = rhs
        gens = self.idealexpr(rhs)
        self.define(name, npos, "quotient", rhs)
        return QuotDecl(name, rhs, gens, loc)

    def checkstmt(self, loc: Loc) -> CheckStmt:
        checker, cpos = self.match(_CHECKER, "a checker id", f"checker ids: {', '.join(CHECK_IDS)}")
        if checker not in CHECK_IDS:
            self.error("binding", f"unknown checker {checker!r}", f"checker ids: {', '.join(CHECK_IDS)}", cpos)
        self.expect("(", "write check all(R, I)")
        qname, qpos = self.ident("the first argument is a quotient ring or ring name")
        if qname not in self.env:
            self.error("binding", f"undefined name {qname!r}", "declare the ring before the check", qpos)
        qkind, ring = self.env[qname]
        if qkind not in ("quotient", "ring"):
            self.error("binding", f"{qname!r} is an {qkind}, not a ring", "pass the quotient ring first", qpos)
        self.expect(",", "write check all(R, I)")
        ideal = self.ideal_arg(ring, "the second argument is an ideal name or ideal(...)")
        J = None
        localization = False
        seen = set()
        while self.accept(","):
            key, kpos = self.ident("options are J= and localization=")
            if key in seen:
                self.error("syntax", f"option {key!r} given twice", "give each option once", kpos)
            seen.add(key)
            self.expect("=", f"write '{key}=...'")
            if key == "J":
                J = self.ideal_arg(ring, "J is an ideal name or ideal(...)")
            elif key == "localization":
                val, vpos = self.ident("write localization=true or localization=false")
                if val not in ("true", "false"):
                    self.error("syntax", f"expected true or false, found {val!r}",
                               "write localization=true or localization=false", vpos)
                localization = val == "true"
            else:
                self.error("syntax", f"unknown check option {key!r}", "options are J= and localization=", kpos)
        self.expect(")", "close the argument list with ')'")
        return CheckStmt(checker, qname, ideal, J, localization, loc)

    def ideal_arg(self, ring: str, hint: str):
        name, pos = self.ident(hint)
        if name == "ideal":
            self.pos = pos
            gens = self.idealexpr(ring)
            if not gens:
                self.error("binding", "ideal needs at least one generator", "list generators inside ideal(...)", pos)
            return gens
        if name not in self.env:
            self.error("binding", f"undefined name {name!r}", "declare the ideal before the check", pos)
        kind, iring = self.env[name]
        if kind != "ideal":
            self.error("binding", f"{name!r} is a {kind}, not an ideal", hint, pos)
        if iring != ring:
            self.error("binding", f"ideal {name!r} lives in ring {iring!r}, not {ring!r}",
                       "declare the ideal after the matching ring", pos)
        return name

    def corpusstmt(self, loc: Loc) -> CorpusStmt:
        kind, kpos = self.ident("write corpus monomial(vars=3, maxdeg=3, count=20, seed=7)")
        if kind not in CORPUS_KINDS:
            self.error("binding", f"unknown corpus kind {kind!r}", "the available kind is 'monomial'", kpos)
        self.expect("(", "write corpus monomial(vars=3, maxdeg=3, count=20, seed=7)")
        opts = {"vars": 3, "maxdeg": 3, "count": 20, "seed": 0}
        seen = set()
        if not self.accept(")"):
            while True:
                key, opos = self.ident("options are vars=, maxdeg=, count=, seed=")
                if key not in opts or key in seen:
                    self.error("syntax", f"unknown or repeated option {key!r}",
                               "options are vars=, maxdeg=, count=, seed=", opos)
                seen.add(key)
                self.expect("=", f"write '{key}=...'")
                vpos = self.pos
                val = self.integer(f"{key} is an integer")
                lo = 0 if key == "seed" else 1
                if val < lo or (key == "vars" and val > 8) or (key == "maxdeg" and val > 6) or (key == "count" and val > 10000):
                    self.error("binding", f"{key} = {val} out of range",
                               "vars <= 8, maxdeg <= 6, count <= 10000, seed >= 0", vpos)
                opts[key] = val
                if not self.accept(","):
                    break
            self.expect(")", "close the option list with ')'")
        return CorpusStmt(kind, opts["vars"], opts["maxdeg"], opts["count"], opts["seed"], loc)


def parse_session(text: str | bytes) -> SessionAST:
    """Parse a session; raises :class:`SessionError` on any defect."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SessionError("lexical", "input is not valid UTF-8", 1, 1, "save the file as UTF-8") from exc
    parser = _Parser(text)
    try:
        return parser.session()
    except SessionError:
        raise
    except (ValueError, RecursionError, OverflowError) as exc:
        loc = parser.loc()
        raise SessionError("syntax", f"malformed input ({type(exc).__name__})", loc.line, loc.column,
                           "check the statement syntax") from exc
