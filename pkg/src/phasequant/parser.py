"""Text expressions over phase-space variables.

Grammar: variables from the active table (q, p, q1..qn, p1..pn, z, zb, ...),
the symbols ``hbar`` and ``i``, integer and ``a/b`` rational literals, the
operators ``+ - * / ^`` and parentheses.  ``^`` binds tightest and is
right-associative; division is only allowed by nonzero constants.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from .poly import PhasePoly, VariableTable
from .scalars import HbarScalar, Qi

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


class ParseError(ValueError):
    """Syntax or lookup error, carrying the 0-based position in the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Token(NamedTuple):
    kind: str  # "int" | "name" | "op" | "end"
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = pos + len(text[pos:]) - len(text[pos:].lstrip())
            if stripped >= len(text):
                break
            raise ParseError(f"unexpected character {text[stripped]!r}", stripped)
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, table: VariableTable):
        self.tokens = _tokenize(text)
        self.table = table
        self.idx = 0

    def peek(self) -> _Token:
        return self.tokens[self.idx]

    def next(self) -> _Token:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect_op(self, op: str):
        tok = self.next()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.pos)

    def parse(self) -> PhasePoly:
        value = self.sum()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return value

    def sum(self) -> PhasePoly:
        tok = self.peek()
        negate = False
        if tok.kind == "op" and tok.text in "+-":
            self.next()
            negate = tok.text == "-"
        value = self.product()
        if negate:
            value = -value
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.next()
                rhs = self.product()
                value = value - rhs if tok.text == "-" else value + rhs
            else:
                return value

    def product(self) -> PhasePoly:
        value = self.power()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "*/":
                self.next()
                rhs = self.power()
                if tok.text == "*":
                    value = value * rhs
                else:
                    value = self._divide(value, rhs, tok.pos)
            else:
                return value

    def _divide(self, value: PhasePoly, rhs: PhasePoly, pos: int) -> PhasePoly:
        const = rhs.constant_value()
        if const is None:
            raise ParseError("division only by constants", pos)
        if const.is_zero():
            raise ParseError("division by zero", pos)
        inverse = {-k: (Qi(1) / c) for k, c in const.coeffs.items()}
        if len(inverse) != 1:
            raise ParseError("division only by single-power hbar constants", pos)
        return value * HbarScalar(inverse)

    def power(self) -> PhasePoly:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.next()
            exp_tok = self.next()
            if exp_tok.kind != "int":
                raise ParseError("exponent must be a nonnegative integer", exp_tok.pos)
            return base ** int(exp_tok.text)
        return base

    def atom(self) -> PhasePoly:
        tok = self.next()
        if tok.kind == "int":
            return PhasePoly.constant(self.table, Qi(Fraction(int(tok.text))))
        if tok.kind == "name":
            if tok.text == "hbar":
                return PhasePoly.constant(self.table, HbarScalar.of(1, 1))
            if tok.text == "i":
                return PhasePoly.constant(self.table, Qi(0, 1))
            if tok.text in self.table.names:
                return PhasePoly.variable(self.table, tok.text)
            raise ParseError(f"unknown variable {tok.text!r}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            inner = self.sum()
            self.expect_op(")")
            return inner
        if tok.kind == "op" and tok.text == "-":
            return -self.atom()
        raise ParseError(f"unexpected {tok.text!r}" if tok.text else "unexpected end of input", tok.pos)


def parse_expression(text: str, table: VariableTable) -> PhasePoly:
    """Parse ``text`` into an exact polynomial over ``table``.

    Raises ParseError (with position) on malformed input or unknown names.
    """
    return _Parser(text, table).parse()
