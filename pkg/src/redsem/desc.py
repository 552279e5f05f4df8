"""Syntax descriptions, layers, terms and the recursion schemes over them.

A :class:`Description` is a runtime value describing a polynomial functor
built from identity, constants, binary products and tagged sums. Interpreting
a description at some content type gives a :data:`Layer`: one node of syntax
whose recursive positions (``Rec``) hold arbitrary content. A :class:`Term`
is the least fixed point, a layer whose recursive positions hold terms.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable, Generic, Optional, Tuple, TypeVar, Union

R = TypeVar("R")
S = TypeVar("S")
A = TypeVar("A")

Path = Tuple[str, ...]


class ConstKind(enum.Enum):
    UNIT = "unit"
    NAT = "nat"


# -- descriptions -------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Identity:
    pass


@dataclass(frozen=True, slots=True)
class Constant:
    kind: ConstKind


@dataclass(frozen=True, slots=True)
class Product:
    left: "Description"
    right: "Description"


@dataclass(frozen=True, slots=True)
class Sum:
    arity: int
    branches: Tuple["Description", ...]

    def __post_init__(self):
        if not isinstance(self.branches, tuple):
            object.__setattr__(self, "branches", tuple(self.branches))
        if self.arity != len(self.branches):
            raise ValueError(
                f"sum arity {self.arity} does not match {len(self.branches)} branches"
            )


Description = Union[Identity, Constant, Product, Sum]

I = Identity()
UNIT = Constant(ConstKind.UNIT)
NAT = Constant(ConstKind.NAT)


def sum_of(*branches: Description) -> Sum:
    return Sum(len(branches), tuple(branches))


# -- layers -------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Rec(Generic[R]):
    value: R


@dataclass(frozen=True, slots=True)
class Const:
    kind: ConstKind
    payload: Optional[int] = None


@dataclass(frozen=True, slots=True)
class Pair(Generic[R]):
    left: "Layer[R]"
    right: "Layer[R]"


@dataclass(frozen=True, slots=True)
class Tagged(Generic[R]):
    tag: int
    payload: "Layer[R]"


Layer = Union[Rec, Const, Pair, Tagged]


@dataclass(frozen=True, slots=True)
class Term:
    """Least fixed point of a description: a layer of terms."""

    layer: Layer

    def __repr__(self):
        return f"Term({self.layer!r})"


def wrap(layer: Layer) -> Term:
    return Term(layer)


def unwrap(t: Term) -> Layer:
    return t.layer


# -- conformance --------------------------------------------------------------


class ConformanceError(ValueError):
    """A layer, term or frame does not conform to a description."""

    def __init__(self, path: Path, message: str):
        self.path = tuple(path)
        where = "/".join(self.path) or "<root>"
        super().__init__(f"at {where}: {message}")


class TagOutOfRange(ConformanceError):
    def __init__(self, path: Path, tag: int, arity: int):
        self.tag = tag
        self.arity = arity
        super().__init__(path, f"tag {tag} out of range for sum of arity {arity}")


class KindMismatch(ConformanceError):
    pass


class ShapeMismatch(ConformanceError):
    pass


def check_payload(kind: ConstKind, payload: Any) -> bool:
    if kind is ConstKind.UNIT:
        return payload is None
    return isinstance(payload, int) and not isinstance(payload, bool) and payload >= 0


RecCheck = Callable[[Any, Path], None]


def validate_layer(d: Description, layer: Any, rec_check: Optional[RecCheck] = None,
                   path: Path = ()) -> None:
    """Raise a :class:`ConformanceError` unless ``layer`` conforms to ``d``.

    ``rec_check(value, path)`` is called on the content of every ``Rec``
    position and may raise in turn.
    """
    match d:
        case Identity():
            if not isinstance(layer, Rec):
                raise ShapeMismatch(path, f"expected a recursive position, got {layer!r}")
            if rec_check is not None:
                rec_check(layer.value, path + ("rec",))
        case Constant(kind):
            if not isinstance(layer, Const):
                raise ShapeMismatch(path, f"expected a {kind.value} constant, got {layer!r}")
            if layer.kind is not kind:
                raise KindMismatch(path, f"expected constant of kind {kind.value}, "
                                         f"got {layer.kind.value}")
            if not check_payload(kind, layer.payload):
                raise KindMismatch(path, f"bad {kind.value} payload {layer.payload!r}")
        case Product(left, right):
            if not isinstance(layer, Pair):
                raise ShapeMismatch(path, f"expected a pair, got {layer!r}")
            validate_layer(left, layer.left, rec_check, path + ("left",))
            validate_layer(right, layer.right, rec_check, path + ("right",))
        case Sum(arity, branches):
            if not isinstance(layer, Tagged):
                raise ShapeMismatch(path, f"expected a tagged layer, got {layer!r}")
            if not (0 <= layer.tag < arity):
                raise TagOutOfRange(path, layer.tag, arity)
            validate_layer(branches[layer.tag], layer.payload, rec_check,
                           path + (f"tag{layer.tag}",))
        case _:
            raise TypeError(f"not a description: {d!r}")


def validate_term(d: Description, t: Any, path: Path = ()) -> None:
    """Validate every layer of ``t`` against ``d``; errors carry the full path."""

    def check(sub, p):
        validate_term(d, sub, p)

    if not isinstance(t, Term):
        raise ShapeMismatch(path, f"expected a term, got {t!r}")
    validate_layer(d, t.layer, check, path)


def conforms(d: Description, t: Term) -> bool:
    try:
        validate_term(d, t)
    except ConformanceError:
        return False
    return True


# -- functorial action and recursion schemes -----------------------------------


def fmap(d: Description, f: Callable[[R], S], layer: Layer) -> Layer:
    # type dispatch instead of match: this is the innermost loop of decomposition
    kind = type(d)
    if kind is Sum:
        return Tagged(layer.tag, fmap(d.branches[layer.tag], f, layer.payload))
    if kind is Identity:
        return Rec(f(layer.value))
    if kind is Product:
        return Pair(fmap(d.left, f, layer.left), fmap(d.right, f, layer.right))
    if kind is Constant:
        return layer
    raise TypeError(f"not a description: {d!r}")


def cata(d: Description, alg: Callable[[Layer], A], t: Term) -> A:
    return alg(fmap(d, lambda sub: cata(d, alg, sub), t.layer))


def para(d: Description, alg: Callable[[Layer], A], t: Term) -> A:
    """Fold where the algebra sees ``(subterm, result)`` at each recursive position."""
    return alg(fmap(d, lambda sub: (sub, para(d, alg, sub)), t.layer))


def rec_positions(layer: Layer) -> int:
    match layer:
        case Rec():
            return 1
        case Const():
            return 0
        case Pair(left, right):
            return rec_positions(left) + rec_positions(right)
        case Tagged(_, payload):
            return rec_positions(payload)
    raise TypeError(f"not a layer: {layer!r}")


def size(d: Description, t: Term) -> int:
    """Number of term nodes."""
    return cata(d, lambda layer: 1 + _sum_recs(layer), t)


def depth(d: Description, t: Term) -> int:
    return cata(d, lambda layer: 1 + _max_recs(layer), t)


def rec_values(layer: Layer):
    """Contents of the recursive positions, left to right."""
    match layer:
        case Rec(v):
            yield v
        case Pair(left, right):
            yield from rec_values(left)
            yield from rec_values(right)
        case Tagged(_, payload):
            yield from rec_values(payload)


def _sum_recs(layer) -> int:
    return sum(rec_values(layer))


def _max_recs(layer) -> int:
    return max(rec_values(layer), default=0)

