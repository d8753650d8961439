# wedgespace/core/parser.py
"""
Recursive-descent parser for summands, wedges and table keys.

    wedge   := summand ("v" summand)*
    summand := "S" INT | "M" "(" INT "," INT ")"
    space   := summand | ["Sigma" "^" INT] "(" space ("^" space)+ ")"

Whitespace between tokens is ignored. Errors carry a 0-based offset.
"""

import re
from dataclasses import dataclass
from typing import List, NoReturn, Optional

from .errors import NotSimplyConnectedError, ParseError, UnsupportedSpaceError
from .models import Moore, SpaceDesc, Sphere, SuspendedSummand, WedgeInput
from .smash import smash_factors

_TOKEN = re.compile(r"(?P<int>\d+)|(?P<word>Sigma|S|M|v)|(?P<sym>[(),^])")
_SPACE = re.compile(r"\s+")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        ws = _SPACE.match(text, pos)
        if ws:
            pos = ws.end()
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"Unexpected character {text[pos]!r}", text, pos)
        tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    # --- cursor ---

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def position(self) -> int:
        tok = self.peek()
        return tok.position if tok else len(self.text.rstrip())

    def fail(self, message: str, position: Optional[int] = None) -> NoReturn:
        raise ParseError(message, self.text, self.position() if position is None else position)

    def expect(self, value: str) -> Token:
        tok = self.peek()
        if tok is None or tok.value != value:
            found = repr(tok.value) if tok else "end of input"
            self.fail(f"Expected {value!r}, found {found}")
        self.index += 1
        return tok

    def integer(self) -> int:
        tok = self.peek()
        if tok is None or tok.kind != "int":
            found = repr(tok.value) if tok else "end of input"
            self.fail(f"Expected an integer, found {found}")
        self.index += 1
        return int(tok.value)

    def done(self):
        if self.peek() is not None:
            self.fail(f"Unexpected {self.peek().value!r}")

    # --- grammar ---

    def basic(self) -> SpaceDesc:
        tok = self.peek()
        if tok is None:
            self.fail("Expected a sphere 'S<n>' or Moore space 'M(<q>,<n>)'")
        start = tok.position
        if tok.value == "S":
            self.index += 1
            n = self.integer()
            if n < 1:
                raise NotSimplyConnectedError(f"S{n}", start)
            return Sphere(n)
        if tok.value == "M":
            self.index += 1
            self.expect("(")
            q_pos = self.position()
            q = self.integer()
            self.expect(",")
            n = self.integer()
            self.expect(")")
            if q < 2:
                self.fail(f"Moore space coefficient must be >= 2, got {q}", q_pos)
            if n < 1:
                raise NotSimplyConnectedError(f"M({q},{n})", start)
            return Moore(q, n)
        self.fail(f"Expected a sphere 'S<n>' or Moore space 'M(<q>,<n>)', found {tok.value!r}")

    def summand(self) -> SuspendedSummand:
        start = self.position()
        space = self.basic()
        if space.conn < 1:
            raise NotSimplyConnectedError(space.render(), start)
        return SuspendedSummand(space)

    def wedge(self) -> WedgeInput:
        if self.peek() is None:
            self.fail("Empty expression", 0)
        summands = [self.summand()]
        while self.peek() is not None and self.peek().value == "v":
            self.index += 1
            summands.append(self.summand())
        self.done()
        return WedgeInput(tuple(summands))

    def space(self) -> SpaceDesc:
        tok = self.peek()
        suspensions = 0
        if tok is not None and tok.value == "Sigma":
            self.index += 1
            self.expect("^")
            suspensions = self.integer()
            tok = self.peek()
            if tok is None or tok.value != "(":
                self.fail("Expected '(' after the suspension prefix")
        if tok is not None and tok.value == "(":
            start = tok.position
            self.index += 1
            factors = [self.space()]
            while self.peek() is not None and self.peek().value == "^":
                self.index += 1
                factors.append(self.space())
            self.expect(")")
            if len(factors) < 2:
                self.fail("A smash needs at least two factors", start)
            try:
                return smash_factors(factors, suspensions)
            except UnsupportedSpaceError as e:
                self.fail(str(e), start)
        return self.basic()


def parse_summand(text: str) -> SuspendedSummand:
    parser = _Parser(text)
    if parser.peek() is None:
        parser.fail("Empty expression", 0)
    summand = parser.summand()
    parser.done()
    return summand


def parse_wedge(expr: str) -> WedgeInput:
    return _Parser(expr).wedge()


def parse_space(text: str) -> SpaceDesc:
    """Any canonical descriptor, as used for group-table keys."""
    parser = _Parser(text)
    if parser.peek() is None:
        parser.fail("Empty expression", 0)
    space = parser.space()
    parser.done()
    return space
