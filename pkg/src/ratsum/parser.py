"""Parser for rational summand expressions in the variables k and n.

Grammar:

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | atom ('^' int)?
    atom   := int | int '/' int | 'k' | 'n' | '(' expr ')'

Exponents are integers (negative allowed); an int followed by '/' and
another int is consumed as one fraction literal at the atom level.  The
result is a fully normalized BiRat.
"""

from __future__ import annotations

from fractions import Fraction

from .bipoly import BiRat
from .errors import DegenerateInput, ParseError

_OPS = set("+-*/^()")


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int):
        self.kind = kind  # "int" | "name" | one of _OPS | "end"
        self.text = text
        self.pos = pos

    def __repr__(self) -> str:
        return f"_Token({self.kind!r}, {self.text!r}, {self.pos})"


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            toks.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(i, f"unexpected character {ch!r}")
    toks.append(_Token("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, ahead: int = 0) -> _Token:
        j = min(self.i + ahead, len(self.toks) - 1)
        return self.toks[j]

    def advance(self) -> _Token:
        t = self.toks[self.i]
        if t.kind != "end":
            self.i += 1
        return t

    def parse(self) -> BiRat:
        if self.peek().kind == "end":
            raise ParseError(0, "empty expression")
        value = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(t.pos, f"unexpected token {t.text!r}")
        return value

    def expr(self) -> BiRat:
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> BiRat:
        value = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance().kind
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self) -> BiRat:
        t = self.peek()
        if t.kind == "-":
            self.advance()
            return -self.factor()
        value = self.atom()
        if self.peek().kind == "^":
            self.advance()
            value = value ** self.exponent()
        return value

    def exponent(self) -> int:
        sign = 1
        t = self.peek()
        if t.kind == "-":
            self.advance()
            sign = -1
            t = self.peek()
        if t.kind != "int":
            raise ParseError(t.pos, "expected integer exponent")
        self.advance()
        return sign * int(t.text)

    def atom(self) -> BiRat:
        t = self.peek()
        if t.kind == "int":
            self.advance()
            num = int(t.text)
            if self.peek().kind == "/" and self.peek(1).kind == "int":
                self.advance()
                dt = self.advance()
                den = int(dt.text)
                if den == 0:
                    raise DegenerateInput("denominator is identically zero")
                return BiRat.const(Fraction(num, den))
            return BiRat.const(num)
        if t.kind == "name":
            self.advance()
            if t.text == "k":
                return BiRat.k()
            if t.text == "n":
                return BiRat.n()
            raise ParseError(t.pos, f"unknown variable {t.text!r}; only k and n are allowed")
        if t.kind == "(":
            self.advance()
            value = self.expr()
            closing = self.peek()
            if closing.kind != ")":
                raise ParseError(closing.pos, "expected ')'")
            self.advance()
            return value
        raise ParseError(t.pos, f"unexpected token {t.text!r}" if t.kind != "end" else "unexpected end of input")


def parse(text: str) -> BiRat:
    """Parse a summand expression into a normalized BiRat."""
    return _Parser(text).parse()
