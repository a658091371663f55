"""
Recursive-descent parser for the field expression language.

Grammar (left-associative binaries, ^ binds tighter than unary minus):

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := primary ("^" ["-"] INTEGER)*
    primary := NUMBER | COORD | FUNC "(" expr ")" | "(" expr ")"

FUNC is one of sin, cos, exp, log, sqrt, atan; COORD is a chart coordinate.
"""

import math
import re
from typing import List, NamedTuple, Sequence

from shared.errors import ParseError

from .nodes import FUNCTIONS, Binary, Const, Expr, Pow, Unary, Var

_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()])"
    r")"
)
_INTEGER_RE = re.compile(r"\d+")

_OPERAND_START = frozenset(["number", "coordinate", "function", "(", "-"])


class Token(NamedTuple):
    kind: str  # num | ident | op | end
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            raise ParseError(pos, f"unexpected character {text[pos]!r}")
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, coords: Sequence[str]):
        self.tokens = tokenize(text)
        self.coords = frozenset(coords)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _is_op(self, symbol: str) -> bool:
        return self.current.kind == "op" and self.current.text == symbol

    def _expect_op(self, symbol: str) -> None:
        if not self._is_op(symbol):
            found = self.current.text or "end of input"
            raise ParseError(
                self.current.offset, f"expected {symbol!r}, found {found!r}", {symbol}
            )
        self._advance()

    def parse(self) -> Expr:
        if self.current.kind == "end":
            raise ParseError(0, "empty expression", _OPERAND_START)
        expr = self._expr()
        if self.current.kind != "end":
            if self._is_op(")"):
                raise ParseError(self.current.offset, "unbalanced ')'")
            raise ParseError(
                self.current.offset,
                f"unexpected {self.current.text!r}",
                {"+", "-", "*", "/", "^", "end of input"},
            )
        return expr

    def _expr(self) -> Expr:
        left = self._term()
        while self._is_op("+") or self._is_op("-"):
            op = self._advance().text
            left = Binary(op, left, self._term())
        return left

    def _term(self) -> Expr:
        left = self._unary()
        while self._is_op("*") or self._is_op("/"):
            op = self._advance().text
            left = Binary(op, left, self._unary())
        return left

    def _unary(self) -> Expr:
        if self._is_op("-"):
            self._advance()
            return Unary("neg", self._unary())
        return self._power()

    def _power(self) -> Expr:
        base = self._primary()
        while self._is_op("^"):
            self._advance()
            sign = 1
            if self._is_op("-"):
                self._advance()
                sign = -1
            token = self.current
            if token.kind != "num" or not _INTEGER_RE.fullmatch(token.text):
                found = token.text or "end of input"
                raise ParseError(
                    token.offset, f"non-integer exponent {found!r}", {"integer"}
                )
            self._advance()
            base = Pow(base, sign * int(token.text))
        return base

    def _primary(self) -> Expr:
        token = self.current
        if token.kind == "num":
            value = float(token.text)
            if not math.isfinite(value):
                raise ParseError(token.offset, f"number literal {token.text!r} is not finite", {"number"})
            self._advance()
            return Const(value)
        if token.kind == "ident":
            self._advance()
            if token.text in FUNCTIONS:
                self._expect_op("(")
                arg = self._expr()
                self._expect_op(")")
                return Unary(token.text, arg)
            if token.text in self.coords:
                return Var(token.text)
            raise ParseError(
                token.offset, f"unknown identifier {token.text!r}", self.coords
            )
        if self._is_op("("):
            self._advance()
            inner = self._expr()
            self._expect_op(")")
            return inner
        found = token.text or "end of input"
        raise ParseError(token.offset, f"expected an operand, found {found!r}", _OPERAND_START)


def parse(text: str, chart) -> Expr:
    """Parse text against the coordinate names of chart.

    chart may be a Chart or a plain sequence of coordinate names.
    """
    coords = getattr(chart, "coords", chart)
    return _Parser(text, coords).parse()
