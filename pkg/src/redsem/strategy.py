"""Decomposition strategies as paramorphic algebras.

The shipped algebra is left-most inner-most and weak: a per-language
``redex_pos`` predicate marks the frame shapes under which no redex may be
searched for (lambda bodies, for instance). ``check_strategy_properties``
evaluates finite instances of the stuckness, left-most, inner-most and
outer-most characterizations against an algebra.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .derivative import EMPTY, Context, Frame, dmap
from .desc import Description, Layer, Term, fmap, para
from .subterms import subterms

FrameShape = Frame


class Decomposition(NamedTuple):
    context: Context
    redex: Term


DecResult = Optional[Decomposition]
DecStrat = Callable[[Context], DecResult]
Contraction = Optional[Tuple[Term, Context]]


@dataclass(frozen=True)
class LanguageSpec:
    name: str
    desc: Description
    is_val: Callable[[Term], bool]
    is_redex: Callable[[Term], bool]
    redex_pos: Callable[[FrameShape], bool]
    contract: Callable[[Term, Context], Contraction]


def _first(pair):
    return pair[0]


def _erase(_):
    return ()


def shape(d: Description, frame: Frame) -> FrameShape:
    """Erase the recursive content stored in a frame, keeping its skeleton."""
    return dmap(d, _erase, frame)


def alg_lmim(spec: LanguageSpec, layer: Layer, c: Context) -> DecResult:
    """Left-most inner-most weak decomposition of one paramorphic layer at context ``c``."""
    d = spec.desc
    found = _find_left_most(spec, subterms(d, layer), c)
    if found is not None:
        return found
    t = Term(fmap(d, _first, layer))
    if spec.is_redex(t):
        return Decomposition(c, t)
    return None


def _find_left_most(spec, entries, c):
    d = spec.desc
    for frame, (sub, strat) in entries:
        if not spec.redex_pos(shape(d, frame)):
            # the whole scan gives up, it does not skip the position
            return None
        found = strat((dmap(d, _first, frame),) + c)
        if found is not None:
            return found
        if not spec.is_val(sub):
            return None
    return None


Algebra = Callable[[LanguageSpec, Layer, Context], DecResult]


def strategy_of(spec: LanguageSpec, t: Term, alg: Algebra = alg_lmim) -> DecStrat:
    def layer_strategy(layer):
        return lambda c: alg(spec, layer, c)

    return para(spec.desc, layer_strategy, t)


def decompose_in(spec: LanguageSpec, t: Term, c: Context, alg: Algebra = alg_lmim) -> DecResult:
    return strategy_of(spec, t, alg)(tuple(c))


def decompose(spec: LanguageSpec, t: Term, alg: Algebra = alg_lmim) -> DecResult:
    return decompose_in(spec, t, EMPTY, alg)


# -- finite strategy characterizations ----------------------------------------

PREDICATES = ("no-redex", "left-most", "inner-most", "outer-most")


@dataclass
class Witness:
    term: Term
    node: Term
    context: Context
    expected: object
    actual: object


@dataclass
class PredicateResult:
    name: str
    instances: int = 0
    premises: int = 0
    witness: Optional[Witness] = None

    @property
    def holds(self) -> bool:
        return self.witness is None


@dataclass
class StrategyReport:
    terms: int = 0
    nodes: int = 0
    results: Dict[str, PredicateResult] = field(
        default_factory=lambda: {name: PredicateResult(name) for name in PREDICATES})

    def holds(self, name: str) -> bool:
        return self.results[name].holds

    def lines(self) -> List[str]:
        out = [f"checked {self.nodes} nodes of {self.terms} terms"]
        for r in self.results.values():
            verdict = "pass" if r.holds else "fail"
            out.append(f"{r.name}: {verdict} ({r.premises}/{r.instances} non-vacuous)")
        return out


def nodes_with_contexts(d: Description, t: Term, c: Context = EMPTY) -> Iterator[Tuple[Term, Context]]:
    """Every node of ``t`` together with the context that rebuilds ``t`` around it."""
    yield t, c
    for frame, sub in subterms(d, t.layer):
        yield from nodes_with_contexts(d, sub, (frame,) + c)


def _reachable(spec: LanguageSpec, entries) -> List[Tuple[Frame, Term, DecStrat]]:
    # positions a left-to-right weak scan can visit: earlier ones are values and
    # every position up to and including this one is a redex position
    out = []
    for frame, (sub, strat) in entries:
        if not spec.redex_pos(shape(spec.desc, frame)):
            break
        out.append((frame, sub, strat))
        if not spec.is_val(sub):
            break
    return out


def check_strategy_properties(spec: LanguageSpec, terms: Iterable[Term],
                              alg: Algebra = alg_lmim) -> StrategyReport:
    """Evaluate the four strategy characterizations at every node of every term.

    Each node is checked at the empty context and at the context locating it
    inside its term. The sub-strategies paired with subterms are the ones
    ``alg`` itself induces. The first counterexample of each predicate is
    kept as its witness.
    """
    d = spec.desc
    report = StrategyReport()
    for term in terms:
        report.terms += 1
        for node, path_ctx in nodes_with_contexts(d, term):
            report.nodes += 1
            layer = fmap(d, lambda s: (s, strategy_of(spec, s, alg)), node.layer)
            entries = subterms(d, layer)
            redex = spec.is_redex(node)
            for c in (EMPTY,) if path_ctx == EMPTY else (EMPTY, path_ctx):
                actual = alg(spec, layer, c)
                _check_no_redex(report, spec, term, node, c, entries, redex, actual)
                _check_left_most(report, spec, term, node, c, entries, actual)
                _check_inner_most(report, spec, term, node, c, entries, redex, actual)
                _check_outer_most(report, term, node, c, redex, actual)
    return report


def _record(report, name, term, node, c, premise, ok, expected, actual):
    r = report.results[name]
    r.instances += 1
    if not premise:
        return
    r.premises += 1
    if not ok and r.witness is None:
        r.witness = Witness(term, node, c, expected, actual)


def _check_no_redex(report, spec, term, node, c, entries, redex, actual):
    premise = not redex and all(strat(c) is None for _, (_, strat) in entries)
    _record(report, "no-redex", term, node, c, premise, actual is None, None, actual)


def _check_left_most(report, spec, term, node, c, entries, actual):
    d = spec.desc
    premised = False
    for frame, _, strat in _reachable(spec, entries):
        found = strat((dmap(d, _first, frame),) + c)
        if found is not None:
            premised = True
            _record(report, "left-most", term, node, c, True, actual == found, found, actual)
    if not premised:
        _record(report, "left-most", term, node, c, False, True, None, actual)


def _check_inner_most(report, spec, term, node, c, entries, redex, actual):
    d = spec.desc
    inner = [strat((dmap(d, _first, frame),) + c) for frame, _, strat in _reachable(spec, entries)]
    inner = [found for found in inner if found is not None]
    premise = redex and bool(inner)
    expected = inner[0] if inner else None
    _record(report, "inner-most", term, node, c, premise, actual in inner, expected, actual)


def _check_outer_most(report, term, node, c, redex, actual):
    expected = Decomposition(c, node)
    _record(report, "outer-most", term, node, c, redex, actual == expected, expected, actual)
