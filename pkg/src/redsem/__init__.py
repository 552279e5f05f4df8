"""Generic reduction semantics: supply a syntax description, value and redex
predicates and a contraction function; get decomposition, plugging, a driver
loop and a refocused driver."""
from .derivative import EMPTY, Context, Frame, compose_ctx, dmap, plug, plug_ctx
from .desc import Term, cata, fmap, para, validate_layer, validate_term
from .driver import Status, Trace, compare_engines, drive, plug_val, refocus, step
from .langdefs import hr_spec, lsr_spec
from .strategy import (
    Decomposition,
    LanguageSpec,
    alg_lmim,
    check_strategy_properties,
    decompose,
    decompose_in,
)
from .subterms import subterms
from .syntax import format_context, format_term, parse_term

__all__ = [
    "EMPTY", "Context", "Frame", "compose_ctx", "dmap", "plug", "plug_ctx",
    "Term", "cata", "fmap", "para", "validate_layer", "validate_term",
    "Status", "Trace", "compare_engines", "drive", "plug_val", "refocus", "step",
    "hr_spec", "lsr_spec",
    "Decomposition", "LanguageSpec", "alg_lmim", "check_strategy_properties",
    "decompose", "decompose_in",
    "subterms",
    "format_context", "format_term", "parse_term",
]
