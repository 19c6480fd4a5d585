"""Exact multivariate arithmetic over Q."""
from .poly import MultiPoly, Scalar, VarId
from .ratfunc import (PoleError, RatFunc, evaluate, partial_derivative, poly_gcd,
                      ratfunc_arith, substitute)
from .text import ParseError, from_json, from_text, parse_poly, parse_var, to_json, to_text, var_name

__all__ = [
    "MultiPoly", "Scalar", "VarId", "PoleError", "RatFunc", "evaluate",
    "partial_derivative", "poly_gcd", "ratfunc_arith", "substitute", "ParseError",
    "from_json", "from_text", "parse_poly", "parse_var", "to_json", "to_text", "var_name",
]
