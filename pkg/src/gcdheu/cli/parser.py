"""Recursive-descent parser for polynomial expressions.

Grammar, loosest binding first::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)*
    atom   := INT | "i" | NAME | "(" expr ")"

Multiplication is always explicit.  ``i`` is the imaginary unit in the
Gaussian ring and an error in the integer ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from ..errors import ParseError, RingError, StructuralError
from ..multipoly import MultiPoly
from ..ring import Ring


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "PolyExpr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of "+", "-", "*"
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Pow:
    base: "PolyExpr"
    exponent: int


@dataclass(frozen=True)
class Group:
    inner: "PolyExpr"


PolyExpr = Union[Num, Imag, Var, Neg, BinOp, Pow, Group]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(\S))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    col: int


def tokenize(src: str) -> list:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(src, pos)
        if m is None:
            break
        num, name, op = m.groups()
        start = m.start(m.lastindex) + 1
        if num is not None:
            toks.append(_Tok("int", num, start))
        elif name is not None:
            toks.append(_Tok("name", name, start))
        else:
            if op not in "+-*^()":
                raise ParseError(f"unexpected character {op!r}", start)
            toks.append(_Tok("op", op, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(src) + 1))
    return toks


class _Parser:
    def __init__(self, src: str, ring: Ring):
        self.toks = tokenize(src)
        self.pos = 0
        self.ring = ring

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def take(self) -> _Tok:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> None:
        tok = self.take()
        if tok.text != text or tok.kind != "op":
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.col)

    def parse(self) -> PolyExpr:
        e = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.col)
        return e

    def expr(self) -> PolyExpr:
        left = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> PolyExpr:
        left = self.unary()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.take()
            left = BinOp("*", left, self.unary())
        return left

    def unary(self) -> PolyExpr:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> PolyExpr:
        base = self.atom()
        while self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            tok = self.take()
            if tok.kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", tok.col)
            base = Pow(base, int(tok.text))
        return base

    def atom(self) -> PolyExpr:
        tok = self.take()
        if tok.kind == "int":
            return Num(int(tok.text))
        if tok.kind == "name":
            if tok.text == "i":
                if self.ring is not Ring.ZI:
                    raise RingError("imaginary unit 'i' needs the Gaussian ring", tok.col)
                return Imag()
            return Var(tok.text)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            self.expect(")")
            return Group(inner)
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.col)


def parse_expr(src: str, ring: Ring) -> PolyExpr:
    return _Parser(src, ring).parse()


def expr_variables(e: PolyExpr, out: Optional[list] = None) -> list:
    """Variable names in order of first appearance."""
    if out is None:
        out = []
    if isinstance(e, Var):
        if e.name not in out:
            out.append(e.name)
    elif isinstance(e, (Neg, Group)):
        expr_variables(e.operand if isinstance(e, Neg) else e.inner, out)
    elif isinstance(e, BinOp):
        expr_variables(e.left, out)
        expr_variables(e.right, out)
    elif isinstance(e, Pow):
        expr_variables(e.base, out)
    return out


def lower(e: PolyExpr, ring: Ring, vars: Sequence[str]) -> MultiPoly:
    """Evaluate an expression tree to a canonical MultiPoly."""
    vars = tuple(vars)
    if isinstance(e, Num):
        return MultiPoly.const(ring, vars, e.value)
    if isinstance(e, Imag):
        return MultiPoly.const(ring, vars, ring.scalar(0, 1))
    if isinstance(e, Var):
        if e.name not in vars:
            raise StructuralError(f"variable {e.name!r} not in variable list {vars}")
        return MultiPoly.var(ring, vars, e.name)
    if isinstance(e, Neg):
        return -lower(e.operand, ring, vars)
    if isinstance(e, Group):
        return lower(e.inner, ring, vars)
    if isinstance(e, Pow):
        return lower(e.base, ring, vars) ** e.exponent
    a, b = lower(e.left, ring, vars), lower(e.right, ring, vars)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    return a * b


def parse_poly(src: str, ring: Ring, var_order: Optional[Sequence[str]] = None) -> MultiPoly:
    """Parse ``src`` into a MultiPoly.

    Without ``var_order`` the variables are ordered by first appearance, so the
    last new name becomes the main variable.
    """
    e = parse_expr(src, ring)
    vars = list(var_order) if var_order is not None else expr_variables(e)
    return lower(e, ring, vars)
