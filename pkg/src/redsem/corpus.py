"""Term, layer and frame enumerators plus the LSR golden corpus.

Depth counts term nodes along the longest path, so ``(num 1)`` has depth 1.
"""
from __future__ import annotations

import random
from typing import Iterator, List, Sequence

from .derivative import HOLE, Frame, InLeft, InRight, InTag
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
    depth,
)
from .langdefs import (
    HR_DESC,
    LSR_DESC,
    add,
    app,
    lam,
    num,
    reset,
    shift,
    var,
)


def layers(d: Description, pool: Sequence, nats: Sequence[int] = (0,)) -> Iterator[Layer]:
    """Every layer of ``d`` with recursive content from ``pool`` and naturals from ``nats``."""
    match d:
        case Identity():
            for x in pool:
                yield Rec(x)
        case Constant(ConstKind.NAT):
            for n in nats:
                yield Const(ConstKind.NAT, n)
        case Constant(ConstKind.UNIT):
            yield Const(ConstKind.UNIT, None)
        case Product(left, right):
            rights = list(layers(right, pool, nats))
            for l in layers(left, pool, nats):
                for r in rights:
                    yield Pair(l, r)
        case Sum(_, branches):
            for tag, branch in enumerate(branches):
                for payload in layers(branch, pool, nats):
                    yield Tagged(tag, payload)


def frames(d: Description, pool: Sequence, nats: Sequence[int] = (0,)) -> Iterator[Frame]:
    """Every frame of ``d`` whose stored layers draw content from ``pool``."""
    match d:
        case Identity():
            yield HOLE
        case Constant():
            return
        case Product(left, right):
            right_layers = list(layers(right, pool, nats))
            for fr in frames(left, pool, nats):
                for r in right_layers:
                    yield InLeft(fr, r)
            left_layers = list(layers(left, pool, nats))
            for l in left_layers:
                for fr in frames(right, pool, nats):
                    yield InRight(l, fr)
        case Sum(_, branches):
            for tag, branch in enumerate(branches):
                for fr in frames(branch, pool, nats):
                    yield InTag(tag, fr)


def terms(d: Description, max_depth: int, nats: Sequence[int] = (0,)) -> List[Term]:
    """All terms of ``d`` up to ``max_depth``, shallower terms first."""
    known: List[Term] = []
    for _ in range(max_depth):
        known = [Term(layer) for layer in layers(d, known, nats)]
    return sorted(known, key=lambda t: depth(d, t))


def hr_terms(max_depth: int, nats: Sequence[int] = (1,)) -> List[Term]:
    return terms(HR_DESC, max_depth, nats)


def lsr_terms(max_depth: int, nats: Sequence[int] = (0,)) -> List[Term]:
    return terms(LSR_DESC, max_depth, nats)


def random_term(rng: random.Random, d: Sum, max_depth: int,
                nats: Sequence[int] = range(4)) -> Term:
    """A random term of ``d`` no deeper than ``max_depth``."""
    leaves = [tag for tag, b in enumerate(d.branches) if not _has_rec(b)]
    tags = range(d.arity) if max_depth > 1 else leaves
    tag = rng.choice(list(tags))
    payload = _random_layer(rng, d.branches[tag], d, max_depth - 1, nats)
    return Term(Tagged(tag, payload))


def _random_layer(rng, b, d, budget, nats):
    match b:
        case Identity():
            return Rec(random_term(rng, d, rng.randint(1, budget), nats))
        case Constant(ConstKind.NAT):
            return Const(ConstKind.NAT, rng.choice(list(nats)))
        case Constant(ConstKind.UNIT):
            return Const(ConstKind.UNIT, None)
        case Product(left, right):
            return Pair(_random_layer(rng, left, d, budget, nats),
                        _random_layer(rng, right, d, budget, nats))
    raise TypeError(f"unsupported branch description {b!r}")


def _has_rec(b: Description) -> bool:
    match b:
        case Identity():
            return True
        case Product(left, right):
            return _has_rec(left) or _has_rec(right)
        case Sum(_, branches):
            return any(_has_rec(x) for x in branches)
    return False


def fuzz_lsr(count: int, max_depth: int = 4, seed: int = 0) -> List[Term]:
    rng = random.Random(seed)
    return [random_term(rng, LSR_DESC, max_depth) for _ in range(count)]


TEST_SHIFT = add(num(1), reset(add(num(2), shift(app(var(0), app(var(0), num(3)))))))
OMEGA = app(lam(app(var(0), var(0))), lam(app(var(0), var(0))))


def lsr_golden_corpus() -> List[Term]:
    """Hand-picked LSR programs covering every contraction rule and the stuck cases."""
    ident = lam(var(0))
    return [
        TEST_SHIFT,
        add(num(1), reset(add(num(2), shift(app(var(0), app(var(0), add(num(3), num(4)))))))),
        lam(add(num(1), num(2))),
        app(ident, num(1)),
        app(ident, add(num(1), num(2))),
        app(app(ident, num(1)), add(num(2), num(3))),
        add(shift(num(0)), num(1)),
        shift(add(num(1), num(2))),
        reset(num(5)),
        reset(add(num(1), shift(num(7)))),
        reset(add(shift(app(var(0), num(10))), num(1))),
        add(num(1), reset(add(num(2), shift(add(num(100), num(1)))))),
        reset(app(lam(add(var(0), var(0))), shift(app(var(0), num(4))))),
        app(lam(lam(add(var(0), var(1)))), num(5)),
        app(app(lam(lam(add(var(1), var(0)))), num(5)), num(6)),
        reset(reset(add(num(1), shift(app(var(0), num(2)))))),
        add(reset(add(num(2), shift(app(var(0), app(var(0), num(1)))))), num(10)),
        reset(add(shift(lam(var(0))), num(1))),
        var(0),
        add(var(0), num(1)),
        app(num(1), num(2)),
        shift(app(var(0), num(1))),
        add(num(1), shift(var(0))),
        num(42),
        OMEGA,
    ]


def lsr_golden_small() -> List[Term]:
    """Golden corpus minus divergent programs (for checks that run to completion)."""
    return [t for t in lsr_golden_corpus() if t != OMEGA]
