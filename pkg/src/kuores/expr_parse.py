"""Polynomial expression parser and canonical printer.

Grammar::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | <whitespace>) unary)*
    unary := '-' unary | atom
    atom  := INT | VAR | '(' expr ')' | atom '^' INT

Juxtaposition after whitespace multiplies, so ``X^5 Y`` equals ``X^5*Y``;
``X^5Y`` without the space is rejected.  ``^`` binds tighter than unary
minus.  Integer literals are reduced into the target domain on the fly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import ParseError
from .numeric import QQ, ExtElement, FpElement
from .polynomial import Poly, PolyRing, VARIABLES

MAX_EXPONENT = 512

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "var", "op", "end"
    text: str
    pos: int
    spaced: bool


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "PolyExpr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Pow:
    base: "PolyExpr"
    exponent: int


PolyExpr = Union[Num, Var, Neg, BinOp, Pow]


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            kind, start = "int", m.start(1)
        elif m.group(2) is not None:
            kind, start = "var", m.start(2)
        elif m.group(3) is not None:
            start = m.start(3)
            if m.group(3) not in "+-*^()":
                raise ParseError(f"unexpected character {m.group(3)!r}", start)
            kind = "op"
        else:
            break  # trailing whitespace
        tokens.append(Token(kind, m.group(m.lastindex), start, start > pos))
        pos = m.end()
    tokens.append(Token("end", "", n, False))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = tokenize(text)
        self.i = 0
        self.variables = tuple(variables)

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind != "op":
            raise ParseError(f"expected {text!r}", self.tok.pos)
        return self.advance()

    def parse(self) -> PolyExpr:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        e = self.expr()
        if self.tok.kind != "end":
            if self.tok.text == ")":
                raise ParseError("unbalanced ')'", self.tok.pos)
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def expr(self) -> PolyExpr:
        e = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            e = BinOp(op, e, self.term())
        return e

    def _starts_atom(self, t: Token) -> bool:
        return t.kind in ("int", "var") or (t.kind == "op" and t.text == "(")

    def term(self) -> PolyExpr:
        e = self.unary()
        while True:
            t = self.tok
            if t.kind == "op" and t.text == "*":
                self.advance()
                e = BinOp("*", e, self.unary())
            elif self._starts_atom(t):
                if not t.spaced:
                    raise ParseError("implicit multiplication needs '*' or a space", t.pos)
                e = BinOp("*", e, self.unary())
            else:
                return e

    def unary(self) -> PolyExpr:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> PolyExpr:
        t = self.advance()
        if t.kind == "int":
            e = Num(int(t.text))
        elif t.kind == "var":
            if t.text not in VARIABLES:
                raise ParseError(f"unknown symbol {t.text!r}", t.pos)
            if t.text not in self.variables:
                raise ParseError(f"variable {t.text} is not declared", t.pos)
            e = Var(t.text)
        elif t.kind == "op" and t.text == "(":
            e = self.expr()
            if self.tok.kind == "end":
                raise ParseError("unbalanced '('", t.pos)
            self.expect(")")
        elif t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        else:
            raise ParseError(f"unexpected {t.text!r}", t.pos)
        while self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            x = self.tok
            if x.kind == "op" and x.text in "-(":
                raise ParseError("exponent must be a nonnegative integer literal", x.pos)
            if x.kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", x.pos)
            self.advance()
            k = int(x.text)
            if k > MAX_EXPONENT:
                raise ParseError(f"exponent exceeds {MAX_EXPONENT}", x.pos)
            e = Pow(e, k)
        return e


def parse_expr(text: str, variables: Sequence[str] = VARIABLES) -> PolyExpr:
    """Parse ``text`` into a syntax tree without expanding it."""
    return _Parser(text, variables).parse()


def target_domain(variables: Sequence[str], domain=QQ):
    """Coefficient domain of the outermost variable, e.g. ``Q[X]`` for ("Y", "X")."""
    for v in reversed(variables[1:]):
        domain = PolyRing(domain, v)
    return domain


def _generators(variables: Sequence[str], domain) -> dict:
    gens = {}
    for idx, v in enumerate(variables):
        dom = target_domain(variables[idx:], domain)
        g = Poly.gen(dom, v)
        for outer in reversed(variables[:idx]):
            dom = PolyRing(dom, g.var)
            g = Poly.constant(g, dom, outer)
        gens[v] = g
    return gens


def evaluate(expr: PolyExpr, variables: Sequence[str], domain=QQ) -> Poly:
    top = target_domain(variables, domain)
    gens = _generators(variables, domain)
    outer = variables[0]

    def ev(e):
        if isinstance(e, Num):
            return Poly.constant(e.value, top, outer)
        if isinstance(e, Var):
            return gens[e.name]
        if isinstance(e, Neg):
            return -ev(e.operand)
        if isinstance(e, Pow):
            return ev(e.base) ** e.exponent
        left, right = ev(e.left), ev(e.right)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        return left * right

    return ev(expr)


def parse_poly(text: str, variables: Sequence[str] = ("Y",), domain=QQ) -> Poly:
    """Parse and expand a polynomial.

    ``variables`` lists the variables from outermost to innermost, so
    ``("Y", "X")`` yields a polynomial in ``Y`` over ``Q[X]``.  Raises
    :class:`ParseError` with a character position on malformed input.
    """
    if isinstance(variables, str):
        variables = (variables,)
    if not variables or len(set(variables)) != len(variables):
        raise ValueError("variables must be distinct and nonempty")
    for v in variables:
        if v not in VARIABLES:
            raise ValueError(f"unsupported variable {v!r}")
    return evaluate(parse_expr(text, variables), variables, domain)


# -- printing ---------------------------------------------------------------


def _var_names(p: Poly) -> list[str]:
    names = [p.var]
    d = p.domain
    while isinstance(d, PolyRing):
        names.append(d.var)
        d = d.base
    return names


def _terms(p: Poly, depth: int):
    """Yield (exponents outer-to-inner, scalar) in descending order."""
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if isinstance(c, Poly):
            if c.is_zero():
                continue
            for exps, s in _terms(c, depth + 1):
                yield (k,) + exps, s
        elif c:
            yield (k,), c


def _scalar(c) -> tuple[bool, str]:
    """(negative?, magnitude text) of a scalar coefficient."""
    if isinstance(c, Fraction):
        neg = c < 0
        a = -c if neg else c
        if a.denominator == 1:
            return neg, str(a.numerator)
        return neg, f"({a.numerator}/{a.denominator})"
    if isinstance(c, FpElement):
        return False, str(c.value)
    if isinstance(c, ExtElement):
        s = str(c)
        return False, f"({s})" if len(c.coeffs) > 1 and sum(1 for x in c.coeffs if x) > 1 else s
    return False, str(c)


def print_poly(p: Poly) -> str:
    """Canonical descending-degree rendering, e.g. ``T^4 - X^10*T - X^13``."""
    names = _var_names(p)
    parts = []
    for exps, c in _terms(p, 0):
        neg, mag = _scalar(c)
        mono = []
        for name, k in reversed(list(zip(names, exps))):
            if k == 1:
                mono.append(name)
            elif k > 1:
                mono.append(f"{name}^{k}")
        if mono:
            body = "*".join(mono if mag == "1" else [mag] + mono)
        else:
            body = mag
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"
