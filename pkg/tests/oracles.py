"""Independent reference implementations used as test oracles.

Terms here are plain tuples such as ``("add", ("num", 1), ("num", 2))`` and
contexts are lists of tuple frames, innermost first. Nothing in this module
touches the generic machinery, so agreement with it is real evidence.
"""
from __future__ import annotations

from redsem.desc import Term
from redsem.langdefs import CONSTRUCTORS, add, app, children, lam, nat_of, num, reset, shift, tag_of, var

BINARY = ("add", "app")
UNARY = ("lam", "reset", "shift")
NATS = ("num", "var")


def to_tuple(t: Term) -> tuple:
    head = CONSTRUCTORS[tag_of(t)]
    if head in NATS:
        return (head, nat_of(t, tag_of(t)))
    return (head, *(to_tuple(s) for s in children(t)))


def from_tuple(t: tuple) -> Term:
    head, *args = t
    if head == "num":
        return num(args[0])
    if head == "var":
        return var(args[0])
    build = {"add": add, "app": app, "lam": lam, "reset": reset, "shift": shift}[head]
    return build(*(from_tuple(a) for a in args))


# -- textbook De Bruijn shifting and substitution --------------------------------


def tshift(d: int, cutoff: int, t: tuple) -> tuple:
    head = t[0]
    if head == "var":
        k = t[1]
        return ("var", k + d if k >= cutoff else k)
    if head == "num":
        return t
    if head in ("lam", "shift"):
        return (head, tshift(d, cutoff + 1, t[1]))
    return (head, *(tshift(d, cutoff, a) for a in t[1:]))


def tsubst(j: int, s: tuple, t: tuple) -> tuple:
    head = t[0]
    if head == "var":
        return s if t[1] == j else t
    if head == "num":
        return t
    if head in ("lam", "shift"):
        return (head, tsubst(j + 1, tshift(1, 0, s), t[1]))
    return (head, *(tsubst(j, s, a) for a in t[1:]))


def tsubst0(body: tuple, v: tuple) -> tuple:
    return tshift(-1, 0, tsubst(0, tshift(1, 0, v), body))


def free_vars(t: tuple, depth: int = 0) -> set:
    head = t[0]
    if head == "var":
        return {t[1] - depth} if t[1] >= depth else set()
    if head == "num":
        return set()
    if head in ("lam", "shift"):
        return free_vars(t[1], depth + 1)
    return set().union(*(free_vars(a, depth) for a in t[1:]))


# -- hand-written left-most inner-most weak reduction for LSR -------------------


def is_val(t: tuple) -> bool:
    return t[0] in ("num", "lam")


def is_redex(t: tuple) -> bool:
    head = t[0]
    if head == "add":
        return t[1][0] == "num" and t[2][0] == "num"
    if head == "app":
        return t[1][0] == "lam" and is_val(t[2])
    if head == "reset":
        return is_val(t[1])
    return head == "shift"


def decomp(t: tuple, ctx: list | None = None):
    """Return ``(ctx, redex)`` or None, descending left to right, never under binders."""
    ctx = [] if ctx is None else ctx
    head = t[0]
    if head in BINARY:
        left, right = t[1], t[2]
        if not is_val(left):
            return decomp(left, [(head + "_l", right)] + ctx)
        if not is_val(right):
            return decomp(right, [(head + "_r", left)] + ctx)
    elif head == "reset" and not is_val(t[1]):
        return decomp(t[1], [("reset",)] + ctx)
    return (ctx, t) if is_redex(t) else None


def plug_frame(frame: tuple, t: tuple) -> tuple:
    kind = frame[0]
    if kind == "reset":
        return ("reset", t)
    head, side = kind.split("_")
    return (head, t, frame[1]) if side == "l" else (head, frame[1], t)


def recompose(ctx: list, t: tuple) -> tuple:
    for frame in ctx:
        t = plug_frame(frame, t)
    return t


def contract(t: tuple, ctx: list):
    head = t[0]
    if head == "add":
        return ("num", t[1][1] + t[2][1]), ctx
    if head == "app":
        return tsubst0(t[1][1], t[2]), ctx
    if head == "reset":
        return t[1], ctx
    # shift: capture up to the nearest reset, lifting what moves under the new binder
    k = ("var", 0)
    for i, frame in enumerate(ctx):
        if frame == ("reset",):
            return ("app", ("lam", t[1]), ("lam", ("reset", k))), ctx[i:]
        lifted = frame if len(frame) == 1 else (frame[0], tshift(1, 0, frame[1]))
        k = plug_frame(lifted, k)
    return None


def run(t: tuple, fuel: int):
    """Small-step reduce; return ``(status, term, steps)``."""
    steps = 0
    while True:
        if is_val(t):
            return "value", t, steps
        found = decomp(t)
        result = None if found is None else contract(found[1], found[0])
        if result is None:
            return "stuck", t, steps
        if steps >= fuel:
            return "fuel-exhausted", t, steps
        t = recompose(result[1], result[0])
        steps += 1


def hr_eval(t: tuple) -> int:
    if t[0] == "num":
        return t[1]
    return hr_eval(t[1]) + hr_eval(t[2])


def count_nodes(t: tuple) -> int:
    return 1 + sum(count_nodes(a) for a in t[1:] if isinstance(a, tuple))
