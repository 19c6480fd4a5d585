"""Poisson brackets and first integrals on W-lattices of type A."""
from .ring import MultiPoly, RatFunc, VarId

__all__ = ["MultiPoly", "RatFunc", "VarId"]
