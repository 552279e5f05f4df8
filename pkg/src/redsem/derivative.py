"""One-hole context frames as datatype derivatives, and contexts built from them.

A frame for a description ``d`` follows the differentiation rules: the
identity has exactly one frame (the hole), a constant has none, a product
puts the hole on the left or on the right and stores the other half, and a
sum picks a branch. A :data:`Context` is a tuple of frames over terms ordered
hole-innermost first.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Tuple, TypeVar, Union

from .desc import (
    Constant,
    ConformanceError,
    Description,
    Identity,
    Layer,
    Path,
    Product,
    Rec,
    RecCheck,
    ShapeMismatch,
    Sum,
    TagOutOfRange,
    Term,
    Pair,
    Tagged,
    fmap,
    validate_layer,
    validate_term,
)

R = TypeVar("R")
S = TypeVar("S")


@dataclass(frozen=True, slots=True)
class Hole:
    pass


@dataclass(frozen=True, slots=True)
class InLeft:
    frame: "Frame"
    right: Layer


@dataclass(frozen=True, slots=True)
class InRight:
    left: Layer
    frame: "Frame"


@dataclass(frozen=True, slots=True)
class InTag:
    tag: int
    frame: "Frame"


Frame = Union[Hole, InLeft, InRight, InTag]
Context = Tuple[Frame, ...]

HOLE = Hole()
EMPTY: Context = ()


class ConstantHasNoHole(ConformanceError):
    pass


def plug(d: Description, frame: Frame, x: R) -> Layer:
    kind = type(d)
    if kind is Sum:
        return Tagged(frame.tag, plug(d.branches[frame.tag], frame.frame, x))
    if kind is Identity:
        return Rec(x)
    if kind is Product:
        if type(frame) is InLeft:
            return Pair(plug(d.left, frame.frame, x), frame.right)
        return Pair(frame.left, plug(d.right, frame.frame, x))
    raise TypeError(f"cannot plug frame {frame!r} under {d!r}")


def dmap(d: Description, f: Callable[[R], S], frame: Frame) -> Frame:
    kind = type(d)
    if kind is Sum:
        return InTag(frame.tag, dmap(d.branches[frame.tag], f, frame.frame))
    if kind is Identity:
        return HOLE
    if kind is Product:
        if type(frame) is InLeft:
            return InLeft(dmap(d.left, f, frame.frame), fmap(d.right, f, frame.right))
        return InRight(fmap(d.left, f, frame.left), dmap(d.right, f, frame.frame))
    raise TypeError(f"cannot map frame {frame!r} under {d!r}")


def plug_ctx(d: Description, c: Context, t: Term) -> Term:
    for frame in c:
        t = Term(plug(d, frame, t))
    return t


def compose_ctx(c0: Context, c1: Context) -> Context:
    """Extend the inner context ``c0`` by the outer context ``c1``."""
    return tuple(c0) + tuple(c1)


def validate_frame(d: Description, frame: object, rec_check: Optional[RecCheck] = None,
                   path: Path = ()) -> None:
    match d:
        case Identity():
            if not isinstance(frame, Hole):
                raise ShapeMismatch(path, f"expected the hole, got {frame!r}")
        case Constant(kind):
            raise ConstantHasNoHole(path, f"no frame exists under a {kind.value} constant")
        case Product(left, right):
            if isinstance(frame, InLeft):
                validate_frame(left, frame.frame, rec_check, path + ("left",))
                validate_layer(right, frame.right, rec_check, path + ("right",))
            elif isinstance(frame, InRight):
                validate_layer(left, frame.left, rec_check, path + ("left",))
                validate_frame(right, frame.frame, rec_check, path + ("right",))
            else:
                raise ShapeMismatch(path, f"expected a product frame, got {frame!r}")
        case Sum(arity, branches):
            if not isinstance(frame, InTag):
                raise ShapeMismatch(path, f"expected a tagged frame, got {frame!r}")
            if not (0 <= frame.tag < arity):
                raise TagOutOfRange(path, frame.tag, arity)
            validate_frame(branches[frame.tag], frame.frame, rec_check,
                           path + (f"tag{frame.tag}",))
        case _:
            raise TypeError(f"not a description: {d!r}")


def validate_context(d: Description, c: Context) -> None:
    def check(sub, p):
        validate_term(d, sub, p)

    for i, frame in enumerate(c):
        validate_frame(d, frame, check, (f"frame{i}",))


def count_holes(frame: Frame) -> int:
    match frame:
        case Hole():
            return 1
        case InLeft(inner, _) | InRight(_, inner) | InTag(_, inner):
            return count_holes(inner)
    raise TypeError(f"not a frame: {frame!r}")
