"""Parser for polynomial expressions in x, y, z with exact rational coefficients.

Accepted syntax: integers, ``+ - * / ^ **``, parentheses and implicit
multiplication (``2x^4y^2``).  Division is only allowed by constants.
"""

from __future__ import annotations

import re
from fractions import Fraction

VARS = "xyz"

Poly3 = dict  # {(i, j, k): Fraction}


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.position = position
        self.text = text
        start = text.rfind("\n", 0, position) + 1
        end = text.find("\n", position)
        line = text[start : end if end >= 0 else len(text)]
        lineno = text.count("\n", 0, position) + 1
        col = position - start
        where = f"position {position}" if lineno == 1 else f"position {position}, line {lineno} column {col + 1}"
        super().__init__(f"{message} (at {where})\n  {line}\n  {' ' * col}^")


_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([A-Za-z_]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        num, op, name = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", num, start))
        elif op is not None:
            tokens.append(("op", "^" if op == "**" else op, start))
        else:
            if name not in VARS:
                raise ParseError(f"unknown symbol {name!r}", text, start)
            tokens.append(("var", name, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _mul(a: Poly3, b: Poly3) -> Poly3:
    out: Poly3 = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def _add(a: Poly3, b: Poly3, sign: int = 1) -> Poly3:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, Fraction(0)) + sign * c
    return {e: c for e, c in out.items() if c != 0}


def _const(a) -> Poly3:
    a = Fraction(a)
    return {(0, 0, 0): a} if a else {}


def _is_const(a: Poly3) -> bool:
    return all(e == (0, 0, 0) for e in a)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse_top(self) -> list[tuple[int, Poly3]]:
        """Top-level sum, returned term by term with source positions."""
        terms = []
        sign = 1
        tok = self.peek()
        if tok[0] == "end":
            self.error("empty expression")
        if tok == ("op", "-", tok[2]) or tok == ("op", "+", tok[2]):
            sign = -1 if tok[1] == "-" else 1
            self.take()
        start = self.peek()[2]
        terms.append((start, self._scale(self.term(), sign)))
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()
            start = self.peek()[2]
            t = self.term()
            terms.append((op[2] if op[1] == "-" else start, self._scale(t, -1 if op[1] == "-" else 1)))
        if self.peek()[0] != "end":
            self.error("unexpected token")
        return terms

    @staticmethod
    def _scale(p: Poly3, s: int) -> Poly3:
        return p if s == 1 else {e: -c for e, c in p.items()}

    def expr(self) -> Poly3:
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
        acc = self._scale(self.term(), sign)
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()
            acc = _add(acc, self.term(), -1 if op[1] == "-" else 1)
        return acc

    def term(self) -> Poly3:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                acc = _mul(acc, self.factor())
            elif tok[0] == "op" and tok[1] == "/":
                self.take()
                dtok = self.peek()
                d = self.factor()
                if not _is_const(d):
                    self.error("division by a non-constant expression", dtok)
                if not d:
                    self.error("division by zero", dtok)
                inv = 1 / d[(0, 0, 0)]
                acc = {e: c * inv for e, c in acc.items()}
            elif tok[0] in ("num", "var") or (tok[0] == "op" and tok[1] == "("):
                acc = _mul(acc, self.factor())
            else:
                return acc

    def factor(self) -> Poly3:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            f = self.factor()
            return self._scale(f, -1 if tok[1] == "-" else 1)
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            etok = self.take()
            if etok[0] != "num":
                self.error("exponent must be a non-negative integer", etok)
            out = _const(1)
            for _ in range(int(etok[1])):
                out = _mul(out, base)
            return out
        return base

    def atom(self) -> Poly3:
        tok = self.take()
        if tok[0] == "num":
            return _const(int(tok[1]))
        if tok[0] == "var":
            e = [0, 0, 0]
            e[VARS.index(tok[1])] = 1
            return {tuple(e): Fraction(1)}
        if tok[0] == "op" and tok[1] == "(":
            inner = self.expr()
            if self.peek()[1] != ")":
                self.error("expected ')'")
            self.take()
            return inner
        self.error("expected a number, variable or '('", tok)


def parse_polynomial(text: str, degree: int | None = None) -> tuple[int, Poly3]:
    """Parse ``text`` to a homogeneous polynomial; returns (degree, terms)."""
    parser = _Parser(text)
    terms = parser.parse_top()
    total: Poly3 = {}
    d0 = degree
    for pos, t in terms:
        degs = {sum(e) for e in t}
        if len(degs) > 1:
            raise ParseError("term is not homogeneous", text, pos)
        if degs:
            d = degs.pop()
            if d0 is None:
                d0 = d
            elif d != d0:
                raise ParseError(f"non-homogeneous input: term has degree {d}, expected {d0}", text, pos)
        total = _add(total, t)
    if not total:
        raise ParseError("expression is identically zero", text, 0)
    return d0, total
