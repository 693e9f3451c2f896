"""Text notation for flat numbers, mnesors and mnesor expressions.

Grammar, loosest binding first::

    expr   := prod ('+' prod)*
    prod   := scaled ('*' scaled)*
    scaled := unary ('.' flat)*
    unary  := '~' unary | atom
    atom   := 'ZERO' | 'ALL' | 'PST' [flat] | 'NGT' [flat] | '(' expr ')'
    flat   := '(' ['+'|'-'] digits ')'

``PST(+2)`` is sugar for ``PST.(+2)`` and ``~`` is conjugation.  The
typographic minus U+2212 is accepted wherever ``-`` is.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from mnesor.core import ALL, NGT, PST, ZERO, Mnesor, conj, madd, mmul, smul
from mnesor.minplus import FlatNumber

_KEYWORDS = {"ZERO": ZERO, "ALL": ALL, "PST": PST, "NGT": NGT}


class ParseError(ValueError):
    """Malformed notation.  ``offset`` is a byte offset into the UTF-8 input."""

    def __init__(self, text: str, index: int, expected: list[str], found: str):
        self.offset = len(text[:index].encode("utf-8"))
        self.expected = sorted(set(expected))
        self.found = found
        super().__init__(
            f"at byte {self.offset}: expected {' or '.join(self.expected)}, found {found}"
        )


@dataclass(frozen=True)
class Token:
    kind: str  # KEYWORD, INT, or the punctuation character itself; EOF at end
    text: str
    index: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<kw>[A-Za-z_]\w*)|(?P<int>\d+)|(?P<punct>[()+\-−*.~]))")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:]
            stripped = rest.lstrip()
            if not stripped:
                tokens.append(Token("EOF", "", len(text)))
                return tokens
            index = pos + len(rest) - len(stripped)
            raise ParseError(text, index, ["a token"], repr(stripped[0]))
        if m.group("kw") is not None:
            word = m.group("kw")
            if word not in _KEYWORDS:
                raise ParseError(text, m.start("kw"), list(_KEYWORDS), repr(word))
            tokens.append(Token("KEYWORD", word, m.start("kw")))
        elif m.group("int") is not None:
            tokens.append(Token("INT", m.group("int"), m.start("int")))
        else:
            ch = m.group("punct")
            tokens.append(Token("-" if ch == "−" else ch, ch, m.start("punct")))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected):
        tok = self.tok
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        raise ParseError(self.text, tok.index, expected, found)

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail([f"'{kind}'" if kind not in ("INT", "EOF") else _describe(kind)])
        tok = self.tok
        self.i += 1
        return tok

    def flat(self) -> FlatNumber:
        self.expect("(")
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.tok.kind == "-" else 1
            self.i += 1
        elif self.tok.kind != "INT":
            self.fail(["'+'", "'-'", "digits"])
        digits = self.expect("INT")
        self.expect(")")
        return FlatNumber(sign * int(digits.text))

    def expr(self) -> Mnesor:
        value = self.prod()
        while self.tok.kind == "+":
            self.i += 1
            value = madd(value, self.prod())
        return value

    def prod(self) -> Mnesor:
        value = self.scaled()
        while self.tok.kind == "*":
            self.i += 1
            value = mmul(value, self.scaled())
        return value

    def scaled(self) -> Mnesor:
        value = self.unary()
        while self.tok.kind == ".":
            self.i += 1
            value = smul(value, self.flat())
        return value

    def unary(self) -> Mnesor:
        if self.tok.kind == "~":
            self.i += 1
            return conj(self.unary())
        return self.atom()

    def atom(self) -> Mnesor:
        tok = self.tok
        if tok.kind == "KEYWORD":
            self.i += 1
            value = _KEYWORDS[tok.text]
            if value.graded and self.tok.kind == "(":
                value = smul(value, self.flat())
            return value
        if tok.kind == "(":
            self.i += 1
            value = self.expr()
            self.expect(")")
            return value
        self.fail(["'~'", "'('", *(f"'{k}'" for k in _KEYWORDS)])

    def end(self):
        if self.tok.kind != "EOF":
            self.fail(["end of input", "'+'", "'*'", "'.'"])


def _describe(kind: str) -> str:
    return {"INT": "digits", "EOF": "end of input"}[kind]


def parse_flat(text: str) -> FlatNumber:
    """Parse ``(0)``, ``(+2)``, ``(-1)``."""
    p = _Parser(text)
    value = p.flat()
    p.expect("EOF")
    return value


def parse_mnesor(text: str) -> Mnesor:
    """Parse a single literal: ``ZERO``, ``ALL``, ``PST``, ``NGT(-3)``..."""
    p = _Parser(text)
    tok = p.tok
    if tok.kind != "KEYWORD":
        p.fail([f"'{k}'" for k in _KEYWORDS])
    value = p.atom()
    p.expect("EOF")
    return value


def evaluate(text: str) -> Mnesor:
    p = _Parser(text)
    value = p.expr()
    p.end()
    return value
