"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace is insignificant, implicit multiplication is rejected)::

    expr     := sign? term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := rational | variable ('^' uint)? | '(' expr ')'
    rational := int ('/' uint)?

A leading sign on an expression is accepted so that every polynomial the
formatter prints can be read back.  Identifiers that are not ring variables
may be resolved through an optional ``bindings`` mapping.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .errors import ParseError, UnknownVariableError
from .poly import Polynomial, RingContext

MAX_EXPONENT = 1 << 16

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", self.byte_offset(pos))
            kind = m.lastgroup
            start = m.start(kind)
            self.items.append((kind, m.group(kind), start))
            pos = m.end()
        self.items.append(("end", "", len(text)))
        self.i = 0

    def byte_offset(self, pos: int) -> int:
        return len(self.text[:pos].encode("utf-8"))

    def peek(self) -> tuple[str, str, int]:
        return self.items[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.items[self.i]
        self.i += 1
        return tok

    def error(self, message: str, pos: int | None = None) -> ParseError:
        if pos is None:
            pos = self.peek()[2]
        return ParseError(message, self.byte_offset(pos))


class _Parser:
    def __init__(self, text: str, ring: RingContext, bindings: Mapping[str, Polynomial] | None):
        self.toks = _Tokens(text)
        self.ring = ring
        self.bindings = bindings or {}

    def parse(self) -> Polynomial:
        result = self.expr()
        kind, value, pos = self.toks.peek()
        if kind != "end":
            if kind in ("int", "name") or value == "(":
                raise self.toks.error("implicit multiplication is not allowed; use '*'", pos)
            raise self.toks.error(f"unexpected {value!r}", pos)
        return result

    def expr(self) -> Polynomial:
        sign = 1
        kind, value, _ = self.toks.peek()
        if kind == "op" and value in "+-":
            self.toks.next()
            sign = -1 if value == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while True:
            kind, value, _ = self.toks.peek()
            if kind == "op" and value in "+-":
                self.toks.next()
                rhs = self.term()
                result = result + rhs if value == "+" else result - rhs
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            kind, value, _ = self.toks.peek()
            if kind == "op" and value == "*":
                self.toks.next()
                result = result * self.factor()
            else:
                return result

    def uint(self) -> int:
        kind, value, pos = self.toks.next()
        if kind != "int":
            raise self.toks.error("expected an unsigned integer", pos)
        return int(value)

    def factor(self) -> Polynomial:
        kind, value, pos = self.toks.next()
        if kind == "int":
            num = int(value)
            k2, v2, _ = self.toks.peek()
            if k2 == "op" and v2 == "/":
                self.toks.next()
                den_pos = self.toks.peek()[2]
                den = self.uint()
                if den == 0:
                    raise self.toks.error("division by zero", den_pos)
                return self.ring.constant(Fraction(num, den))
            return self.ring.constant(num)
        if kind == "name":
            if value in self.ring.variables:
                base = self.ring.var(value)
            elif value in self.bindings:
                base = self.bindings[value]
            else:
                raise UnknownVariableError(value, self.toks.byte_offset(pos))
            k2, v2, _ = self.toks.peek()
            if k2 == "op" and v2 == "^":
                self.toks.next()
                exp_pos = self.toks.peek()[2]
                k = self.uint()
                if k > MAX_EXPONENT:
                    raise self.toks.error(f"exponent {k} exceeds {MAX_EXPONENT}", exp_pos)
                return base**k
            return base
        if kind == "op" and value == "(":
            inner = self.expr()
            k2, v2, p2 = self.toks.next()
            if v2 != ")":
                raise self.toks.error("expected ')'", p2)
            return inner
        if kind == "end":
            raise self.toks.error("unexpected end of input", pos)
        raise self.toks.error(f"unexpected {value!r}", pos)


def parse_poly(text: str, ring: RingContext, bindings: Mapping[str, Polynomial] | None = None) -> Polynomial:
    """Parse ``text`` into a polynomial over ``ring``.

    Raises ParseError (with a byte offset) on bad syntax and
    UnknownVariableError for names that are neither variables nor bindings.
    """
    return _Parser(text, ring, bindings).parse()
