"""Exact census of supersingular isogeny classes over finite fields."""

from .weil import PrimePower, WeilRep, MultipleWeil

__all__ = ["PrimePower", "WeilRep", "MultipleWeil"]
__version__ = "0.1.0"
