"""A small expression language for group orders.

Grammar (``^`` binds tightest and is right-associative, ``*`` and ``/`` are
left-associative)::

    expr   := power (("*" | "/") power)*
    power  := atom ("^" power)?
    atom   := INT | NAME "(" expr ("," expr)* ")" | "(" expr ")"

``/`` is an exact quotient.  Names are the family constructors in
:mod:`gpsieve.catalog.families` plus ``gcd``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..factored import FactoredInteger, factor
from . import families

__all__ = [
    "Num",
    "Call",
    "BinOp",
    "OrderExpr",
    "ParseError",
    "EvaluationError",
    "parse_order_expr",
    "evaluate",
    "to_source",
]


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, src: str = ""):
        self.offset = offset
        self.src = src
        super().__init__(f"{message} at offset {offset}")


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["OrderExpr", ...]


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "OrderExpr"
    right: "OrderExpr"


OrderExpr = Union[Num, Call, BinOp]

CONSTRUCTORS = dict(families.CONSTRUCTORS)
CONSTRUCTORS["gcd"] = None  # handled on factored values, see evaluate()

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while src[pos:].strip():
        m = _TOKEN.match(src, pos)
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("num", num, m.start(1)))
        elif name is not None:
            tokens.append(("name", name, m.start(2)))
        elif sym is not None:
            if sym not in "*/^(),":
                raise ParseError(f"unexpected character {sym!r}", m.start(3), src)
            tokens.append((sym, sym, m.start(3)))
        pos = m.end()
    tokens.append(("eof", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {found}", tok[2], self.src)
        self.i += 1
        return tok

    def expr(self) -> OrderExpr:
        node = self.power()
        while self.peek()[0] in ("*", "/"):
            op = self.take(self.peek()[0])[0]
            node = BinOp(op, node, self.power())
        return node

    def power(self) -> OrderExpr:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take("^")
            return BinOp("^", base, self.power())
        return base

    def atom(self) -> OrderExpr:
        kind, text, offset = self.peek()
        if kind == "num":
            self.take("num")
            return Num(int(text))
        if kind == "name":
            self.take("name")
            if text not in CONSTRUCTORS:
                raise ParseError(f"unknown constructor {text!r}", offset, self.src)
            self.take("(")
            args = [self.expr()]
            while self.peek()[0] == ",":
                self.take(",")
                args.append(self.expr())
            self.take(")")
            return Call(text, tuple(args))
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        found = "end of input" if kind == "eof" else repr(text)
        raise ParseError(f"expected a number, name or '(', found {found}", offset, self.src)


def parse_order_expr(src: str) -> OrderExpr:
    parser = _Parser(src)
    tree = parser.expr()
    parser.take("eof")
    return tree


def evaluate(e: OrderExpr) -> FactoredInteger:
    if isinstance(e, Num):
        if e.value < 1:
            raise EvaluationError("orders are positive; literal 0 is not allowed")
        return factor(e.value)
    if isinstance(e, BinOp):
        left = evaluate(e.left)
        right = evaluate(e.right)
        if e.op == "*":
            return left * right
        if e.op == "/":
            try:
                return left / right
            except ValueError as exc:
                raise EvaluationError(f"inexact quotient: {exc}") from None
        return left ** right.value
    if e.name == "gcd":
        vals = [evaluate(a) for a in e.args]
        out = vals[0]
        for v in vals[1:]:
            out = out.gcd(v)
        return out
    args = [evaluate(a).value for a in e.args]
    try:
        return CONSTRUCTORS[e.name](*args)
    except TypeError:
        raise EvaluationError(f"{e.name}() does not take {len(args)} arguments") from None
    except ValueError as exc:
        raise EvaluationError(f"{e.name}{tuple(args)}: {exc}") from None


_PREC = {"*": 1, "/": 1, "^": 2}


def to_source(e: OrderExpr, _parent: int = 0, _right: bool = False) -> str:
    """Pretty-print with the fewest parentheses that re-parse to the same tree."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Call):
        return f"{e.name}({', '.join(to_source(a) for a in e.args)})"
    prec = _PREC[e.op]
    if e.op == "^":
        text = f"{to_source(e.left, prec + 1)}^{to_source(e.right, prec)}"
    else:
        text = f"{to_source(e.left, prec)}{e.op}{to_source(e.right, prec, True)}"
    needs = prec < _parent or (prec == _parent and _right and e.op != "^")
    return f"({text})" if needs else text
