"""Polynomial expressions over Q: parsing and printing.

Grammar (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (('*'|'/') power)*          '/' only by a nonzero constant
    power  := atom ['^' INTEGER]
    atom   := INTEGER | VARIABLE | '(' expr ')' | '-' atom

Juxtaposition such as ``2x`` is not accepted; write ``2*x``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from fractions import Fraction
from typing import Sequence

from wstrass.exact import UniPoly
from wstrass.quartic import Form

Poly = dict  # exponent tuple -> Fraction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, source: str = ""):
        self.position = position
        self.source = source
        super().__init__(f"{message} at position {position}")


def _tokenize(source: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start, source)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(source)))
    return tokens


def _add(p: Poly, q: Poly, sign: int = 1) -> Poly:
    out = defaultdict(Fraction, p)
    for m, c in q.items():
        out[m] += sign * c
    return {m: c for m, c in out.items() if c}


def _mul(p: Poly, q: Poly) -> Poly:
    out: dict = defaultdict(Fraction)
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            out[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
    return {m: c for m, c in out.items() if c}


def _constant_value(p: Poly, nvars: int):
    if not p:
        return Fraction(0)
    if set(p) == {(0,) * nvars}:
        return p[(0,) * nvars]
    return None


class _Parser:
    def __init__(self, source: str, variables: Sequence[str]):
        self.source = source
        self.vars = list(variables)
        self.nv = len(self.vars)
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.source)

    def const(self, c) -> Poly:
        c = Fraction(c)
        return {(0,) * self.nv: c} if c else {}

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[:2] in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = _add({}, acc, -1)
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            acc = _add(acc, self.term(), 1 if op == "+" else -1)
        return acc

    def term(self) -> Poly:
        acc = self.power()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()
            rhs = self.power()
            if op[1] == "*":
                acc = _mul(acc, rhs)
            else:
                c = _constant_value(rhs, self.nv)
                if c is None:
                    self.error("division by a non-constant is not a polynomial", op)
                if c == 0:
                    self.error("division by zero", op)
                acc = {m: v / c for m, v in acc.items()}
        return acc

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            op = self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer literal", tok if tok[0] != "end" else op)
            self.take()
            k = int(tok[1])
            result = self.const(1)
            for _ in range(k):
                result = _mul(result, base)
            return result
        return base

    def atom(self) -> Poly:
        tok = self.take()
        kind, text, _ = tok
        if kind == "int":
            return self.const(int(text))
        if kind == "name":
            if text not in self.vars:
                self.error(f"unknown variable {text!r} (expected one of {', '.join(self.vars)})", tok)
            m = [0] * self.nv
            m[self.vars.index(text)] = 1
            return {tuple(m): Fraction(1)}
        if (kind, text) == ("op", "("):
            inner = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.error("expected ')'")
            self.take()
            return inner
        if (kind, text) == ("op", "-"):
            return _add({}, self.power(), -1)
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected {text!r}", tok)


def parse_poly(source: str, variables: Sequence[str] = ("x",)) -> Poly:
    """Expanded polynomial as a map from exponent tuples to rationals."""
    return _Parser(source, variables).parse()


def parse_univariate(source: str, var: str = "x") -> UniPoly:
    p = parse_poly(source, (var,))
    top = max((m[0] for m in p), default=-1)
    return UniPoly(p.get((k,), 0) for k in range(top + 1))


def parse_form(source: str, variables: Sequence[str] = ("x", "y", "z")) -> Form:
    return Form(parse_poly(source, variables))


def format_poly(p: Poly, variables: Sequence[str]) -> str:
    """Inverse of :func:`parse_poly` (up to term order)."""
    if not p:
        return "0"
    pieces = []
    for mono in sorted(p, reverse=True):
        c = p[mono]
        factors = []
        for name, e in zip(variables, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        a = abs(c)
        if not factors:
            body = str(a)
        elif a == 1:
            body = "*".join(factors)
        elif a.denominator == 1:
            body = f"{a}*" + "*".join(factors)
        else:
            body = f"{a.numerator}*" + "*".join(factors) + f"/{a.denominator}"
        pieces.append(("-" if c < 0 else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
