"""Recursive-descent parser for the polynomial expression grammar.

Grammar: variables x y z (or t for univariate input); integer and rational
literals (3, 5/2); constants w{n} (primitive n-th root of unity in the active
field) and rad (the radical generator); operators + - * ^ with ^ binding
tighter than * tighter than +/-; parentheses; unary minus.  Whitespace is
insignificant and an explicit * is required between factors.
"""

from __future__ import annotations

import re

from mwalex.algebra import QQ, FieldLacksRoot, FieldSpec, UPoly, qq
from mwalex.multipoly import TriPoly


class SyntaxError_(ValueError):
    """Parse failure with position information."""

    def __init__(self, message, line, col, token=None):
        self.line = line
        self.col = col
        self.token = token
        super().__init__("%s at line %d, column %d%s" % (
            message, line, col, (" (token %r)" % token) if token else ""))


class UnknownConstant(SyntaxError_):
    pass


_TOKEN_RE = re.compile(r"(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+\-*^/]))")


def _tokenize(text):
    tokens = []
    pos = 0
    line, col = 1, 1
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise SyntaxError_("unexpected character", line, col, ch)
        lexeme = m.group(m.lastindex)
        kind = ("int", "name", "op")[m.lastindex - 1]
        tokens.append((kind, lexeme, line, col))
        col += len(lexeme)
        pos = m.end()
    tokens.append(("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text, spec: FieldSpec, variables):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.spec = spec
        self.variables = variables

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, lex, line, col = self.peek()
        if kind != "op" or lex != op:
            raise SyntaxError_("expected %r" % op, line, col, lex or kind)
        return self.advance()

    def parse(self):
        value = self.expr()
        kind, lex, line, col = self.peek()
        if kind != "end":
            raise SyntaxError_("trailing input", line, col, lex)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, lex, _, _ = self.peek()
            if kind == "op" and lex in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if lex == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, lex, _, _ = self.peek()
            if kind == "op" and lex == "*":
                self.advance()
                value = value * self.factor()
            else:
                return value

    def factor(self):
        kind, lex, _, _ = self.peek()
        if kind == "op" and lex == "-":
            self.advance()
            return -self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        kind, lex, _, _ = self.peek()
        if kind == "op" and lex == "^":
            self.advance()
            e = self.exponent()
            return base ** e
        return base

    def exponent(self):
        kind, lex, line, col = self.peek()
        if kind == "int":
            self.advance()
            return int(lex)
        if kind == "op" and lex == "(":
            self.advance()
            inner = self.exponent()
            self.expect_op(")")
            return inner
        raise SyntaxError_("expected an integer exponent", line, col, lex or kind)

    def atom(self):
        kind, lex, line, col = self.advance()
        if kind == "int":
            value = qq(lex)
            nk, nlex, _, _ = self.peek()
            if nk == "op" and nlex == "/":
                save = self.pos
                self.advance()
                dk, dlex, dline, dcol = self.peek()
                if dk == "int":
                    self.advance()
                    value = QQ(int(lex), int(dlex))
                else:
                    self.pos = save  # '/' only forms rational literals
                    raise SyntaxError_("expected an integer denominator", dline, dcol, dlex or dk)
            return TriPoly.constant(self.spec, value)
        if kind == "name":
            if lex in self.variables:
                return TriPoly.variable(self.spec, self.variables[lex])
            if lex == "rad":
                try:
                    return TriPoly.constant(self.spec, self.spec.rad())
                except FieldLacksRoot:
                    raise UnknownConstant("field has no radical generator", line, col, lex)
            m = re.fullmatch(r"w(\d+)", lex)
            if m:
                try:
                    return TriPoly.constant(self.spec, self.spec.omega(int(m.group(1))))
                except FieldLacksRoot:
                    raise UnknownConstant("active field lacks this root of unity", line, col, lex)
            raise UnknownConstant("unknown constant", line, col, lex)
        if kind == "op" and lex == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise SyntaxError_("unexpected token", line, col, lex or kind)


def parse_expression(text: str, spec: FieldSpec) -> TriPoly:
    """Parse a polynomial in x, y, z over the given field tower."""
    return _Parser(text, spec, {"x": "x", "y": "y", "z": "z"}).parse()


_QSPEC = None


def parse_upoly(text: str) -> UPoly:
    """Parse a univariate rational-coefficient polynomial in t."""
    global _QSPEC
    if _QSPEC is None:
        _QSPEC = FieldSpec(1)
    tri = _Parser(text, _QSPEC, {"t": "x"}).parse()
    coeffs = [qq(0)] * (tri.degree_in("x") + 1)
    for expo, c in tri.terms.items():
        if expo[1] or expo[2]:
            raise ValueError("univariate input expected")
        coeffs[expo[0]] = c.rational_value()
    return UPoly(coeffs)
