"""S-expression concrete syntax for terms and contexts.

A term is ``(head arg ...)`` where ``head`` names a constructor and the
arguments fill its recursive and natural-number positions left to right,
e.g. ``(add (num 1) (var 0))``. Contexts print outermost frame first with the
hole written ``[]``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Sequence, Union

from .derivative import Context, Frame, Hole, InLeft, InRight, InTag
from .desc import (
    Const,
    ConstKind,
    Constant,
    Description,
    Identity,
    Layer,
    Pair,
    Product,
    Rec,
    Sum,
    Tagged,
    Term,
)
from .langdefs import CONSTRUCTORS


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}" if line else message)


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class SList:
    items: tuple
    line: int
    column: int


SExpr = Union[Token, SList]

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


def tokenize(text: str) -> List[Token]:
    tokens, pos = [], 0
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        line = sum(1 for s in line_starts if s <= start)
        column = start - line_starts[line - 1] + 1
        tokens.append(Token(m.group(m.lastindex), line, column))
        pos = m.end()
    return tokens


def read_sexpr(text: str) -> SExpr:
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty input", 1, 1)
    expr, i = _read(tokens, 0)
    if i < len(tokens):
        tok = tokens[i]
        raise ParseError(f"unexpected {tok.text!r} after term", tok.line, tok.column)
    return expr


def _read(tokens: Sequence[Token], i: int):
    tok = tokens[i]
    if tok.text == ")":
        raise ParseError("unexpected ')'", tok.line, tok.column)
    if tok.text != "(":
        return tok, i + 1
    items, i = [], i + 1
    while True:
        if i >= len(tokens):
            raise ParseError("unclosed '('", tok.line, tok.column)
        if tokens[i].text == ")":
            return SList(tuple(items), tok.line, tok.column), i + 1
        item, i = _read(tokens, i)
        items.append(item)


def _slots(d: Description) -> List[str]:
    match d:
        case Identity():
            return ["term"]
        case Constant(ConstKind.NAT):
            return ["nat"]
        case Constant(ConstKind.UNIT):
            return []
        case Product(left, right):
            return _slots(left) + _slots(right)
    raise TypeError(f"unsupported branch description {d!r}")


def parse_term(text: str, desc: Sum, names: Sequence[str] = CONSTRUCTORS) -> Term:
    """Parse ``text`` into a term of the language described by ``desc``."""
    return _to_term(read_sexpr(text), desc, names)


def _to_term(expr: SExpr, desc: Sum, names) -> Term:
    if isinstance(expr, Token):
        raise ParseError(f"expected a term, got {expr.text!r}", expr.line, expr.column)
    if not expr.items or not isinstance(expr.items[0], Token):
        raise ParseError("expected a constructor name", expr.line, expr.column)
    head = expr.items[0]
    heads = {name: tag for tag, name in enumerate(names[:desc.arity])}
    if head.text not in heads:
        raise ParseError(f"unknown constructor {head.text!r}", head.line, head.column)
    tag = heads[head.text]
    branch = desc.branches[tag]
    args = list(expr.items[1:])
    slots = _slots(branch)
    if len(args) != len(slots):
        raise ParseError(f"{head.text} takes {len(slots)} argument(s), got {len(args)}",
                         expr.line, expr.column)
    values = [_to_slot(kind, arg, desc, names) for kind, arg in zip(slots, args)]
    layer = _build(branch, iter(values))
    return Term(Tagged(tag, layer))


def _to_slot(kind: str, arg: SExpr, desc, names):
    if kind == "term":
        return _to_term(arg, desc, names)
    if not isinstance(arg, Token) or not arg.text.isdigit() or not arg.text.isascii():
        where = (arg.line, arg.column)
        shown = arg.text if isinstance(arg, Token) else "a list"
        raise ParseError(f"expected a non-negative integer, got {shown!r}", *where)
    return int(arg.text)


def _build(d: Description, values) -> Layer:
    match d:
        case Identity():
            return Rec(next(values))
        case Constant(kind):
            return Const(kind, next(values) if kind is ConstKind.NAT else None)
        case Product(left, right):
            return Pair(_build(left, values), _build(right, values))
    raise TypeError(f"unsupported branch description {d!r}")


# -- printing -----------------------------------------------------------------


def _layer_args(layer: Layer, names) -> List[str]:
    match layer:
        case Rec(t):
            return [format_term(t, names)]
        case Const(ConstKind.NAT, n):
            return [str(n)]
        case Const():
            return []
        case Pair(left, right):
            return _layer_args(left, names) + _layer_args(right, names)
    raise TypeError(f"cannot print layer {layer!r}")


def _sexpr(head: str, args: List[str]) -> str:
    return "(" + " ".join([head] + args) + ")"


def format_term(t: Term, names: Sequence[str] = CONSTRUCTORS) -> str:
    layer = t.layer
    return _sexpr(names[layer.tag], _layer_args(layer.payload, names))


def _frame_args(frame: Frame, inner: str, names) -> List[str]:
    match frame:
        case Hole():
            return [inner]
        case InLeft(fr, right):
            return _frame_args(fr, inner, names) + _layer_args(right, names)
        case InRight(left, fr):
            return _layer_args(left, names) + _frame_args(fr, inner, names)
    raise TypeError(f"cannot print frame {frame!r}")


def format_frame(frame: InTag, inner: str = "[]", names: Sequence[str] = CONSTRUCTORS) -> str:
    return _sexpr(names[frame.tag], _frame_args(frame.frame, inner, names))


def format_context(c: Context, names: Sequence[str] = CONSTRUCTORS) -> str:
    """Render a hole-innermost-first context outermost-first."""
    out = "[]"
    for frame in c:
        out = format_frame(frame, out, names)
    return out
