"""Left-to-right enumeration of the immediate subterms of a layer with their frames."""
from __future__ import annotations

from typing import List, Tuple, TypeVar

from .derivative import HOLE, Frame, InLeft, InRight, InTag
from .desc import Constant, Description, Identity, Layer, Product, Sum

R = TypeVar("R")


def subterms(d: Description, layer: Layer) -> List[Tuple[Frame, R]]:
    """All ``(frame, content)`` pairs such that plugging content into frame gives ``layer``.

    Left factors come before right factors, so the list is in left-to-right
    order of the recursive positions.
    """
    kind = type(d)
    if kind is Sum:
        tag = layer.tag
        return [(InTag(tag, fr), x) for fr, x in subterms(d.branches[tag], layer.payload)]
    if kind is Identity:
        return [(HOLE, layer.value)]
    if kind is Product:
        lefts = [(InLeft(fr, layer.right), x) for fr, x in subterms(d.left, layer.left)]
        rights = [(InRight(layer.left, fr), x) for fr, x in subterms(d.right, layer.right)]
        return lefts + rights
    if kind is Constant:
        return []
    raise TypeError(f"not a description: {d!r}")
