"""Prime fields, monomial orders, weighted polynomial rings and sparse polynomials.

Polynomials are stored as ``{exponent tuple: coefficient}`` dictionaries with
coefficients in ``[0, p)``.  Every monomial order is realised as a sort key that
is a flat tuple of integers, so that negating the key elementwise reverses the
order (the Groebner engine relies on that for its heaps).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from operator import add
from typing import Iterable, Iterator, Mapping, Sequence

Exp = tuple[int, ...]

DEFAULT_PRIME = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def __call__(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse in F_%d" % self.p)
        return pow(a, -1, self.p)

    def to_signed(self, a: int) -> int:
        """Symmetric representative in (-p/2, p/2], used for printing."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a


# ---------------------------------------------------------------------------
# monomial orders


ORDER_KINDS = ("grevlex", "lex", "block")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order.

    ``block`` orders split the variables into consecutive groups, compared
    lexicographically group by group; each group carries its own sub-order
    (``grevlex`` or ``lex``).  The first group is the one being eliminated.
    """

    kind: str = "grevlex"
    blocks: tuple[tuple[int, str], ...] = ()

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            if not self.blocks:
                raise ValueError("block order needs at least one block")
            for size, sub in self.blocks:
                if size <= 0 or sub not in ("grevlex", "lex"):
                    raise ValueError(f"bad block ({size}, {sub!r})")

    @classmethod
    def block(cls, *blocks: tuple[int, str]) -> "MonomialOrder":
        return cls("block", tuple(blocks))

    def key_function(self, weights: Sequence[int]):
        n = len(weights)
        if self.kind == "block":
            if sum(s for s, _ in self.blocks) != n:
                raise ValueError("block sizes do not cover the variables")
            parts = []
            start = 0
            for size, sub in self.blocks:
                parts.append((start, start + size, _simple_key(sub, weights[start:start + size])))
                start += size

            def key(e: Exp) -> tuple[int, ...]:
                out: tuple[int, ...] = ()
                for a, b, k in parts:
                    out += k(e[a:b])
                return out

            return key
        return _simple_key(self.kind, weights)


def _simple_key(kind: str, weights: Sequence[int]):
    w = tuple(weights)
    if kind == "lex":
        return tuple
    if all(x == 1 for x in w):
        return lambda e: (sum(e),) + tuple(-x for x in reversed(e))
    return lambda e: (sum(a * b for a, b in zip(e, w)),) + tuple(-x for x in reversed(e))


# ---------------------------------------------------------------------------
# rings


class PolyRing:
    """Polynomial ring ``F_p[vars]`` with positive weights and a monomial order.

    Rings compare equal when field, variables, weights and order agree.
    """

    def __init__(
        self,
        variables: Sequence[str],
        field: PrimeField | int = DEFAULT_PRIME,
        order: MonomialOrder | str = "grevlex",
        weights: Sequence[int] | None = None,
        yvars: Sequence[str] = (),
    ):
        if isinstance(field, int):
            field = PrimeField(field)
        if isinstance(order, str):
            order = MonomialOrder(order)
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for v in variables:
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", v):
                raise ValueError(f"bad variable name {v!r}")
        weights = tuple(weights) if weights is not None else (1,) * len(variables)
        if len(weights) != len(variables):
            raise ValueError("one weight per variable required")
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be strictly positive")
        self.field = field
        self.p = field.p
        self.variables = variables
        self.nvars = len(variables)
        self.order = order
        self.weights = weights
        self._key = order.key_function(weights)
        self._key_cache: dict[Exp, tuple[int, ...]] = {}
        self._index = {v: i for i, v in enumerate(variables)}
        self.zero_exp: Exp = (0,) * self.nvars
        # secondary grading (the y-degree of blow-up algebras); not part of identity
        self.yindices: tuple[int, ...] = tuple(self.index(v) for v in yvars)

    # identity -----------------------------------------------------------
    def _ident(self):
        return (self.p, self.variables, self.weights, self.order)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        ws = "" if all(w == 1 for w in self.weights) else f", weights={list(self.weights)}"
        return f"PolyRing(F_{self.p}[{', '.join(self.variables)}], {self.order.kind}{ws})"

    # monomials ----------------------------------------------------------
    def key(self, e: Exp) -> tuple[int, ...]:
        k = self._key_cache.get(e)
        if k is None:
            k = self._key(e)
            self._key_cache[e] = k
        return k

    def wdeg(self, e: Exp) -> int:
        return sum(a * b for a, b in zip(e, self.weights))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable {name!r} in {self!r}") from None

    def with_order(self, order: MonomialOrder | str) -> "PolyRing":
        return PolyRing(self.variables, self.field, order, self.weights,
                        [self.variables[i] for i in self.yindices])

    def ydeg(self, e: Exp) -> int:
        return sum(e[i] for i in self.yindices)

    def monomials_of_degree(self, d: int) -> Iterator[Exp]:
        """All exponent vectors of weighted degree ``d``."""
        yield from monomials_of_weight(self.weights, d)

    # elements -----------------------------------------------------------
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self.zero_exp: 1})

    def const(self, c: int) -> "Polynomial":
        c %= self.p
        return Polynomial(self, {self.zero_exp: c} if c else {})

    def gen(self, name_or_index: str | int) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, e: Sequence[int], c: int = 1) -> "Polynomial":
        e = tuple(e)
        if len(e) != self.nvars or any(x < 0 for x in e):
            raise ValueError(f"bad exponent vector {e}")
        c %= self.p
        return Polynomial(self, {e: c} if c else {})

    def from_dict(self, terms: Mapping[Exp, int]) -> "Polynomial":
        p = self.p
        return Polynomial(self, {tuple(e): c % p for e, c in terms.items() if c % p})

    def __call__(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            if x.ring != self:
                raise ValueError("polynomial belongs to a different ring")
            return x
        if isinstance(x, int):
            return self.const(x)
        if isinstance(x, str):
            return parse_polynomial(self, x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)


def monomials_of_weight(weights: Sequence[int], d: int) -> Iterator[Exp]:
    n = len(weights)
    if d < 0:
        return
    if n == 0:
        if d == 0:
            yield ()
        return
    w = weights[-1]
    for k in range(d // w + 1):
        for head in monomials_of_weight(weights[:-1], d - k * w):
            yield head + (k,)


# ---------------------------------------------------------------------------
# polynomials


def exp_mul(a: Exp, b: Exp) -> Exp:
    return tuple(map(add, a, b))


def exp_divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a: Exp, b: Exp) -> Exp:
    return tuple(x if x > y else y for x, y in zip(a, b))


def exp_div(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero residues."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: dict[Exp, int]):
        self.ring = ring
        self.terms = terms
        self._lead: Exp | None = None

    # basic protocol -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        p = self.ring.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        p = self.ring.p
        out: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                v = (out.get(e, 0) + c1 * c2) % p
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "Polynomial":
        c %= self.ring.p
        if not c:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial(self.ring, {e: v * c % p for e, v in self.terms.items()})

    def mul_term(self, e: Exp, c: int = 1) -> "Polynomial":
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {tuple(map(add, e, x)): v * c % p for x, v in self.terms.items()})

    def exact_div_term(self, e: Exp) -> "Polynomial":
        if not all(exp_divides(e, x) for x in self.terms):
            raise ValueError("monomial does not divide every term")
        return Polynomial(self.ring, {exp_div(x, e): v for x, v in self.terms.items()})

    # order-dependent data -------------------------------------------------
    def lead_exp(self) -> Exp:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms, key=self.ring.key)
        return self._lead

    def lead_coeff(self) -> int:
        return self.terms[self.lead_exp()]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    def sorted_terms(self) -> list[tuple[Exp, int]]:
        k = self.ring.key
        return sorted(self.terms.items(), key=lambda t: k(t[0]), reverse=True)

    # gradings -------------------------------------------------------------
    def degree(self) -> int | None:
        """Weighted degree; ``None`` for the zero polynomial.

        For non-homogeneous input this is the largest weighted degree of a term
        (check :meth:`is_homogeneous` to tell the cases apart).
        """
        if not self.terms:
            return None
        return max(self.ring.wdeg(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({self.ring.wdeg(e) for e in self.terms}) <= 1

    def degree_in(self, indices: Iterable[int]) -> int | None:
        idx = tuple(indices)
        if not self.terms:
            return None
        return max(sum(e[i] for i in idx) for e in self.terms)

    def is_homogeneous_in(self, indices: Iterable[int]) -> bool:
        idx = tuple(indices)
        return len({sum(e[i] for i in idx) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def support(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    # evaluation / substitution ------------------------------------------
    def substitute(self, images: Sequence["Polynomial"], target: PolyRing | None = None) -> "Polynomial":
        """Ring map sending variable ``i`` to ``images[i]``."""
        if len(images) != self.ring.nvars:
            raise ValueError("one image per variable required")
        target = target or images[0].ring if images else self.ring
        powers: dict[tuple[int, int], Polynomial] = {}
        out = target.zero()
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    pw = powers.get((i, k))
                    if pw is None:
                        pw = images[i] ** k
                        powers[(i, k)] = pw
                    term = term * pw
            out = out + term
        return out

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        f = self.ring.field
        names = self.ring.variables
        parts = []
        for e, c in self.sorted_terms():
            c = f.to_signed(c)
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                s = str(abs(c))
            elif abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", s))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out


def poly_sum(ring: PolyRing, polys: Iterable[Polynomial]) -> Polynomial:
    return reduce(lambda a, b: a + b, polys, ring.zero())


def poly_arithmetic(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def weighted_degree(f: Polynomial) -> tuple[int | None, bool]:
    """``(degree, homogeneous)``; degree is ``None`` for zero."""
    return f.degree(), f.is_homogeneous()


# ---------------------------------------------------------------------------
# a small infix parser: sums of products of powers, integers and parentheses

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*^()/]))")


MAX_EXPONENT = 1000


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", "^" if m.group(3) == "**" else m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr():
        sign = 1
        if peek()[1] in "+-" and peek()[0] == "op":
            sign = -1 if take()[1] == "-" else 1
        val = term()
        if sign < 0:
            val = -val
        while peek()[0] == "op" and peek()[1] in ("+", "-"):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = power()
        while peek()[0] == "op" and peek()[1] == "*":
            take()
            val = val * power()
        return val

    def power():
        base = atom()
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            tok = take()
            if tok[0] != "int":
                raise PolynomialSyntaxError("exponent must be a non-negative integer", tok[2])
            if int(tok[1]) > MAX_EXPONENT:
                raise PolynomialSyntaxError(f"exponent larger than {MAX_EXPONENT}", tok[2])
            base = base ** int(tok[1])
        return base

    def atom():
        tok = take()
        if tok[0] == "int":
            return ring.const(int(tok[1]))
        if tok[0] == "name":
            if tok[1] not in ring._index:
                raise PolynomialSyntaxError(f"unknown variable {tok[1]!r}", tok[2])
            return ring.gen(tok[1])
        if tok[1] == "(":
            val = expr()
            close = take()
            if close[1] != ")":
                raise PolynomialSyntaxError("expected ')'", close[2])
            return val
        if tok[1] == "-":
            return -atom()
        raise PolynomialSyntaxError(f"unexpected token {tok[1]!r}", tok[2])

    if tokens[0][0] == "end":
        raise PolynomialSyntaxError("empty polynomial", 0)
    result = expr()
    if peek()[0] != "end":
        raise PolynomialSyntaxError(f"unexpected token {peek()[1]!r}", peek()[2])
    return result
