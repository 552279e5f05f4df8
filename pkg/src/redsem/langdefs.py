"""The two reference languages: arithmetic (HR) and lambdas with shift/reset (LSR).

Both share constructor tags 0 (``num``) and 1 (``add``), so the term and frame
builders below serve either language. LSR adds ``lam`` (2), ``var`` (3),
``app`` (4), ``reset`` (5) and ``shift`` (6); variables are De Bruijn indices
and both ``lam`` and ``shift`` bind index 0 in their body.
"""
from __future__ import annotations

from typing import Callable, Optional

from .derivative import HOLE, Context, Frame, InLeft, InRight, InTag, dmap, plug
from .desc import (
    I,
    NAT,
    Const,
    ConstKind,
    Pair,
    Product,
    Rec,
    Tagged,
    Term,
    check_payload,
    fmap,
    sum_of,
)
from .strategy import Contraction, FrameShape, LanguageSpec

NUM, ADD, LAM, VAR, APP, RESET, SHIFT = range(7)

CONSTRUCTORS = ("num", "add", "lam", "var", "app", "reset", "shift")

HR_DESC = sum_of(NAT, Product(I, I))
LSR_DESC = sum_of(NAT, Product(I, I), I, NAT, Product(I, I), I, I)

Renaming = Callable[[int], int]
Substitution = Callable[[int], Term]


# -- builders -----------------------------------------------------------------


def _nat(n: int) -> Const:
    if not check_payload(ConstKind.NAT, n):
        raise ValueError(f"expected a natural number, got {n!r}")
    return Const(ConstKind.NAT, n)


def num(n: int) -> Term:
    return Term(Tagged(NUM, _nat(n)))


def var(n: int) -> Term:
    return Term(Tagged(VAR, _nat(n)))


def add(t0: Term, t1: Term) -> Term:
    return Term(Tagged(ADD, Pair(Rec(t0), Rec(t1))))


def app(t0: Term, t1: Term) -> Term:
    return Term(Tagged(APP, Pair(Rec(t0), Rec(t1))))


def lam(body: Term) -> Term:
    return Term(Tagged(LAM, Rec(body)))


def reset(t: Term) -> Term:
    return Term(Tagged(RESET, Rec(t)))


def shift(body: Term) -> Term:
    return Term(Tagged(SHIFT, Rec(body)))


def add_l(right: Term) -> Frame:
    """``add [] right``"""
    return InTag(ADD, InLeft(HOLE, Rec(right)))


def add_r(left: Term) -> Frame:
    """``add left []``"""
    return InTag(ADD, InRight(Rec(left), HOLE))


def app_l(right: Term) -> Frame:
    return InTag(APP, InLeft(HOLE, Rec(right)))


def app_r(left: Term) -> Frame:
    return InTag(APP, InRight(Rec(left), HOLE))


RESET_C = InTag(RESET, HOLE)
LAM_C = InTag(LAM, HOLE)
SHIFT_C = InTag(SHIFT, HOLE)


# -- views --------------------------------------------------------------------


def tag_of(t: Term) -> int:
    return t.layer.tag


def nat_of(t: Term, tag: int = NUM) -> Optional[int]:
    match t.layer:
        case Tagged(found, Const(_, n)) if found == tag:
            return n
    return None


def children(t: Term):
    match t.layer:
        case Tagged(_, Pair(Rec(t0), Rec(t1))):
            return t0, t1
        case Tagged(_, Rec(body)):
            return (body,)
    return ()


# -- arithmetic ---------------------------------------------------------------


def is_val_hr(t: Term) -> bool:
    return tag_of(t) == NUM


def is_redex_hr(t: Term) -> bool:
    if tag_of(t) != ADD:
        return False
    t0, t1 = children(t)
    return is_val_hr(t0) and is_val_hr(t1)


def redex_pos_hr(shape: FrameShape) -> bool:
    return True


def contract_hr(t: Term, c: Context) -> Contraction:
    if is_redex_hr(t):
        t0, t1 = children(t)
        return num(nat_of(t0) + nat_of(t1)), c
    return None


def hr_spec() -> LanguageSpec:
    return LanguageSpec("hr", HR_DESC, is_val_hr, is_redex_hr, redex_pos_hr, contract_hr)


# -- De Bruijn machinery ------------------------------------------------------


def lift_renaming(r: Renaming) -> Renaming:
    """Push a renaming under one binder: index 0 stays, the rest shift."""
    return lambda n: 0 if n == 0 else r(n - 1) + 1


def _succ(n: int) -> int:
    return n + 1


def rename(t: Term, r: Renaming) -> Term:
    tag = tag_of(t)
    if tag == VAR:
        return var(r(nat_of(t, VAR)))
    if tag in (LAM, SHIFT):
        (body,) = children(t)
        return Term(Tagged(tag, Rec(rename(body, lift_renaming(r)))))
    return Term(fmap(LSR_DESC, lambda sub: rename(sub, r), t.layer))


def lift(t: Term) -> Term:
    """Increment every free variable by one."""
    return rename(t, _succ)


def subst0_map(v: Term) -> Substitution:
    return lambda n: v if n == 0 else var(n - 1)


def lift_subst(s: Substitution) -> Substitution:
    return lambda n: var(0) if n == 0 else lift(s(n - 1))


def substitute(t: Term, s: Substitution) -> Term:
    tag = tag_of(t)
    if tag == VAR:
        return s(nat_of(t, VAR))
    if tag in (LAM, SHIFT):
        (body,) = children(t)
        return Term(Tagged(tag, Rec(substitute(body, lift_subst(s)))))
    return Term(fmap(LSR_DESC, lambda sub: substitute(sub, s), t.layer))


def subst0(t: Term, v: Term) -> Term:
    """Replace index 0 in ``t`` by ``v`` and lower the other free indices."""
    return substitute(t, subst0_map(v))


# -- lambdas with shift/reset ---------------------------------------------------


def is_val_lsr(t: Term) -> bool:
    return tag_of(t) in (NUM, LAM)


def is_redex_lsr(t: Term) -> bool:
    tag = tag_of(t)
    if tag == ADD:
        return is_redex_hr(t)
    if tag == APP:
        t0, t1 = children(t)
        return tag_of(t0) == LAM and is_val_lsr(t1)
    if tag == RESET:
        return is_val_lsr(children(t)[0])
    return tag == SHIFT


def redex_pos_lsr(shape: FrameShape) -> bool:
    return not (isinstance(shape, InTag) and shape.tag in (LAM, SHIFT))


def _unwind(c: Context, t: Term) -> Optional[tuple]:
    # frames absorbed into the captured continuation move under its binder and
    # get lifted; the reset-headed remainder stays where it was
    for i, frame in enumerate(c):
        if frame == RESET_C:
            return c[i:], t
        t = Term(plug(LSR_DESC, dmap(LSR_DESC, lift, frame), t))
    return None


def contract_lsr(t: Term, c: Context) -> Contraction:
    tag = tag_of(t)
    if tag == SHIFT:
        (body,) = children(t)
        unwound = _unwind(c, var(0))
        if unwound is None:
            return None
        rest, captured = unwound
        return app(lam(body), lam(reset(captured))), rest
    if not is_redex_lsr(t):
        return None
    if tag == ADD:
        return contract_hr(t, c)
    if tag == APP:
        f, v = children(t)
        return subst0(children(f)[0], v), c
    # reset of a value
    return children(t)[0], c


def lsr_spec() -> LanguageSpec:
    return LanguageSpec("lsr", LSR_DESC, is_val_lsr, is_redex_lsr, redex_pos_lsr, contract_lsr)


def spec_for(lang: str) -> LanguageSpec:
    try:
        return {"hr": hr_spec, "lsr": lsr_spec}[lang]()
    except KeyError:
        raise ValueError(f"unknown language {lang!r}") from None
