"""Fuel-bounded normalization: the decompose/contract/plug loop and its refocused variant."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .derivative import EMPTY, Context, plug, plug_ctx
from .desc import Term
from .strategy import LanguageSpec, decompose, decompose_in

DEFAULT_FUEL = 10000


class Status(enum.Enum):
    VALUE = "value"
    STUCK = "stuck"
    FUEL_EXHAUSTED = "fuel-exhausted"


class StepKind(enum.Enum):
    CONTRACTION = "contract"
    VALUE_PLUG = "plug"


@dataclass(frozen=True)
class Outcome:
    status: Status
    term: Term


@dataclass(frozen=True)
class StepRecord:
    """One machine transition.

    ``term_after`` in ``context_after`` is where evaluation continues. For a
    contraction, ``context`` and ``redex`` are the decomposition that was
    contracted and ``contractum`` what it became. The drive loop always
    recomposes, so its records carry an empty ``context_after``.
    """

    kind: StepKind
    term_after: Term
    context_after: Context = EMPTY
    context: Optional[Context] = None
    redex: Optional[Term] = None
    contractum: Optional[Term] = None
    contractum_context: Optional[Context] = None


@dataclass(frozen=True)
class Trace:
    initial: Term
    steps: Tuple[StepRecord, ...]
    outcome: Outcome

    @property
    def contractions(self) -> int:
        return sum(1 for s in self.steps if s.kind is StepKind.CONTRACTION)

    @property
    def value_plugs(self) -> int:
        return sum(1 for s in self.steps if s.kind is StepKind.VALUE_PLUG)


@dataclass(frozen=True)
class Next:
    term: Term
    record: StepRecord


def whole_term(spec: LanguageSpec, record: StepRecord) -> Term:
    return plug_ctx(spec.desc, record.context_after, record.term_after)


def step(spec: LanguageSpec, t: Term) -> Union[Outcome, Next]:
    if spec.is_val(t):
        return Outcome(Status.VALUE, t)
    found = decompose(spec, t)
    if found is None:
        return Outcome(Status.STUCK, t)
    contracted = spec.contract(found.redex, found.context)
    if contracted is None:
        return Outcome(Status.STUCK, t)
    t1, c1 = contracted
    after = plug_ctx(spec.desc, c1, t1)
    return Next(after, StepRecord(StepKind.CONTRACTION, after, EMPTY,
                                  found.context, found.redex, t1, c1))


def drive(spec: LanguageSpec, t: Term, fuel: int = DEFAULT_FUEL) -> Trace:
    if fuel < 0:
        raise ValueError("fuel must be non-negative")
    initial, steps = t, []
    while True:
        result = step(spec, t)
        if isinstance(result, Outcome):
            return Trace(initial, tuple(steps), result)
        if len(steps) >= fuel:
            return Trace(initial, tuple(steps), Outcome(Status.FUEL_EXHAUSTED, t))
        steps.append(result.record)
        t = result.term


def plug_val(spec: LanguageSpec, t: Term, c: Context) -> Tuple[Term, Context]:
    """Plug a value outwards frame by frame until the result is no longer a value."""
    c = tuple(c)
    while spec.is_val(t) and c:
        t = Term(plug(spec.desc, c[0], t))
        c = c[1:]
    return t, c


def refocus(spec: LanguageSpec, t: Term, c: Context = EMPTY, fuel: int = DEFAULT_FUEL) -> Trace:
    """Reduce in place: after a contraction, continue at the contractum's context."""
    if fuel < 0:
        raise ValueError("fuel must be non-negative")
    d = spec.desc
    c = tuple(c)
    initial, steps = plug_ctx(d, c, t), []

    def finish(status, term):
        return Trace(initial, tuple(steps), Outcome(status, term))

    while True:
        if spec.is_val(t):
            if not c:
                return finish(Status.VALUE, t)
            if len(steps) >= fuel:
                return finish(Status.FUEL_EXHAUSTED, plug_ctx(d, c, t))
            t, c = plug_val(spec, t, c)
            steps.append(StepRecord(StepKind.VALUE_PLUG, t, c))
            continue
        found = decompose_in(spec, t, c)
        contracted = None if found is None else spec.contract(found.redex, found.context)
        if contracted is None:
            return finish(Status.STUCK, plug_ctx(d, c, t))
        if len(steps) >= fuel:
            return finish(Status.FUEL_EXHAUSTED, plug_ctx(d, c, t))
        t, c = contracted
        steps.append(StepRecord(StepKind.CONTRACTION, t, c,
                                found.context, found.redex, t, c))


@dataclass(frozen=True)
class EngineComparison:
    drive: Trace
    refocus: Trace

    @property
    def agree(self) -> bool:
        return self.drive.outcome == self.refocus.outcome


def compare_engines(spec: LanguageSpec, t: Term, fuel: int = DEFAULT_FUEL) -> EngineComparison:
    return EngineComparison(drive(spec, t, fuel), refocus(spec, t, EMPTY, fuel))
