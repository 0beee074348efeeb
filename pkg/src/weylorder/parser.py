"""Parser for operator expressions and N-polynomials.

Grammar (whitespace is insignificant, ``*`` is optional)::

    expr   := term (('+' | '-') term)*
    term   := ('-' | '+') term | factor ('*'? factor)*
    factor := primary ('^' posint)?
    primary:= atom | rational | '(' expr ')'

Operator mode admits the atoms ``ad``, ``a`` (noncommuting) and ``eps``
(a scalar); npoly mode admits ``N``, ``eps`` and ``t``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .algebra import AD, A, OperatorExpr, Word
from .errors import ModeError, ParseError
from .poly import EPS, MPoly

__all__ = [
    "parse",
    "lower",
    "parse_operator",
    "parse_npoly",
    "Sum",
    "Neg",
    "Product",
    "Power",
    "Atom",
    "Num",
    "MODES",
]

MODES = {
    "operator": frozenset({"ad", "a", "eps"}),
    "npoly": frozenset({"N", "eps", "t"}),
}
ALL_ATOMS = frozenset({"ad", "a", "eps", "N", "t"})


@dataclass(frozen=True)
class Num:
    value: Fraction
    offset: int = 0


@dataclass(frozen=True)
class Atom:
    name: str
    offset: int = 0


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int
    offset: int = 0


@dataclass(frozen=True)
class Product:
    factors: Tuple["Node", ...]
    offset: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    offset: int = 0


@dataclass(frozen=True)
class Sum:
    terms: Tuple[Tuple[int, "Node"], ...]  # (sign, node) with sign in {1, -1}
    offset: int = 0


Node = Union[Num, Atom, Power, Product, Neg, Sum]

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()])"
)

_FACTOR_START = frozenset({"atom", "rational", "'('"})


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte_offset(text, pos), _FACTOR_START)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


class _Parser:
    def __init__(self, text: str, mode: str):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.text = text
        self.mode = mode
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def offset(self, tok) -> int:
        return _byte_offset(self.text, tok[2])

    def error(self, tok, expected):
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"unexpected {what}", self.offset(tok), expected)

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            self.error(tok, {"'+'", "'-'", "end of input"} | _FACTOR_START)
        return node

    def expr(self) -> Node:
        start = self.peek()
        terms = [(1, self.term())]
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            sign = 1 if self.advance()[1] == "+" else -1
            terms.append((sign, self.term()))
        if len(terms) == 1:
            return terms[0][1]
        return Sum(tuple(terms), self.offset(start))

    def term(self) -> Node:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("-", "+"):
            self.advance()
            inner = self.term()
            return Neg(inner, self.offset(tok)) if tok[1] == "-" else inner
        factors = [self.factor()]
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.advance()
                factors.append(self.factor())
            elif tok[0] in ("num", "ident") or (tok[0] == "op" and tok[1] == "("):
                factors.append(self.factor())
            else:
                break
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors), _node_offset(factors[0]))

    def factor(self) -> Node:
        base = self.primary()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.advance()
            exp_tok = self.peek()
            if exp_tok[0] != "num" or "/" in exp_tok[1] or int(exp_tok[1]) < 1:
                self.error(exp_tok, {"positive integer"})
            self.advance()
            return Power(base, int(exp_tok[1]), self.offset(tok))
        return base

    def primary(self) -> Node:
        tok = self.peek()
        kind, value, _ = tok
        if kind == "num":
            self.advance()
            num, _, den = value.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", self.offset(tok))
            return Num(Fraction(int(num), int(den) if den else 1), self.offset(tok))
        if kind == "ident":
            if value not in ALL_ATOMS:
                self.error(tok, _FACTOR_START)
            if value not in MODES[self.mode]:
                raise ModeError(
                    f"atom {value!r} is not allowed in {self.mode} mode",
                    self.offset(tok),
                    {repr(a) for a in MODES[self.mode]},
                )
            self.advance()
            return Atom(value, self.offset(tok))
        if kind == "op" and value == "(":
            self.advance()
            node = self.expr()
            close = self.peek()
            if close[0] != "op" or close[1] != ")":
                self.error(close, {"')'", "'+'", "'-'"} | _FACTOR_START)
            self.advance()
            return node
        self.error(tok, _FACTOR_START)


def _node_offset(node: Node) -> int:
    return node.offset


def parse(text: str, mode: str = "operator") -> Node:
    """Parse ``text`` into an AST, checking atoms against ``mode``."""
    return _Parser(text, mode).parse()


def lower(ast: Node, mode: str = "operator"):
    """Turn an AST into an :class:`OperatorExpr` (operator mode) or :class:`MPoly`."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "operator":
        return _lower_operator(ast)
    return _lower_npoly(ast)


def _check_atom(node: Atom, mode: str) -> None:
    if node.name not in MODES[mode]:
        raise ModeError(f"atom {node.name!r} is not allowed in {mode} mode", node.offset)


def _lower_npoly(node: Node) -> MPoly:
    if isinstance(node, Num):
        return MPoly.const(node.value)
    if isinstance(node, Atom):
        _check_atom(node, "npoly")
        return MPoly.var(node.name)
    if isinstance(node, Power):
        return _lower_npoly(node.base) ** node.exponent
    if isinstance(node, Product):
        out = MPoly.const(1)
        for f in node.factors:
            out = out * _lower_npoly(f)
        return out
    if isinstance(node, Neg):
        return -_lower_npoly(node.operand)
    if isinstance(node, Sum):
        out = MPoly()
        for sign, t in node.terms:
            v = _lower_npoly(t)
            out = out + v if sign > 0 else out - v
        return out
    raise TypeError(f"unknown node {node!r}")


def _lower_operator(node: Node) -> OperatorExpr:
    if isinstance(node, Num):
        return OperatorExpr.scalar(node.value)
    if isinstance(node, Atom):
        _check_atom(node, "operator")
        if node.name == "eps":
            return OperatorExpr.scalar(EPS)
        return OperatorExpr.from_word(Word((AD if node.name == "ad" else A,)))
    if isinstance(node, Power):
        base = _lower_operator(node.base)
        # repeated noncommutative product, never a multinomial shortcut
        out = base
        for _ in range(node.exponent - 1):
            out = out * base
        return out
    if isinstance(node, Product):
        out = OperatorExpr.scalar(1)
        for f in node.factors:
            out = out * _lower_operator(f)
        return out
    if isinstance(node, Neg):
        return -_lower_operator(node.operand)
    if isinstance(node, Sum):
        out = OperatorExpr()
        for sign, t in node.terms:
            v = _lower_operator(t)
            out = out + v if sign > 0 else out - v
        return out
    raise TypeError(f"unknown node {node!r}")


def parse_operator(text: str) -> OperatorExpr:
    return lower(parse(text, "operator"), "operator")


def parse_npoly(text: str) -> MPoly:
    return lower(parse(text, "npoly"), "npoly")
