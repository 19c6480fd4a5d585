"""Log-canonical Poisson bracket on rational functions of the lattice variables."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .generators import TauGenerator, period
from .lattice import LatticeSpec, poisson_coeff
from .ring import MultiPoly, RatFunc, VarId


@dataclass(frozen=True)
class BracketResult:
    i: int
    j: int
    value: RatFunc


def _log_derivatives(num: MultiPoly, den: MultiPoly, vars_: list[VarId]) -> dict[VarId, MultiPoly]:
    # u * d(num/den)/du = u (num_u den - num den_u) / den^2; the den^2 is kept outside
    out = {}
    for u in vars_:
        p = num.diff(u) * den - num * den.diff(u)
        if not p.is_zero():
            out[u] = p * MultiPoly.var(u)
    return out


def poisson_bracket(spec: LatticeSpec, f: RatFunc, g: RatFunc) -> RatFunc:
    """{f, g} = sum_{u,v} c(u,v) u v df/du dg/dv."""
    if f.is_constant() or g.is_constant():
        return RatFunc.const(0)
    a, b = f.pnum, f.pden
    c, d = g.pnum, g.pden
    P = _log_derivatives(a, b, f.variables())
    Q = _log_derivatives(c, d, g.variables())
    total = MultiPoly()
    for u, pu in P.items():
        r = MultiPoly()
        for v, qv in Q.items():
            k = poisson_coeff(spec, u, v)
            if k:
                r = r + qv.scale(k)
        if not r.is_zero():
            total = total + pu * r
    if total.is_zero():
        return RatFunc.const(0)
    return RatFunc.from_parts(f.scalar * g.scalar, total, (b * b) * (d * d))


def _by_index(taus: Sequence[TauGenerator]) -> dict[int, TauGenerator]:
    if len({t.orientation for t in taus}) > 1:
        raise ValueError("generators must share one orientation")
    if len({t.n for t in taus}) > 1:
        raise ValueError("generators must belong to one lattice")
    return {t.index: t for t in taus}


def bracket_family(spec: LatticeSpec, taus: Sequence[TauGenerator], i: int = 1,
                   js: Sequence[int] | None = None) -> list[BracketResult]:
    """{tau_i, tau_j} for j = i+1 .. i+3(n-1) unless js is given.

    The default window ends one step past the last possibly nonzero bracket.
    """
    table = _by_index(taus)
    if i not in table:
        raise ValueError(f"tau_{i} not supplied")
    if js is None:
        js = range(i + 1, i + period(spec) + 1)
    out = []
    for j in js:
        if j not in table:
            raise ValueError(f"tau_{j} not supplied")
        out.append(BracketResult(i, j, poisson_bracket(spec, table[i].value, table[j].value)))
    return out


def gamma(spec: LatticeSpec, taus: Sequence[TauGenerator], i: int) -> RatFunc:
    """{tau_1, tau_i} / (tau_1 tau_i)."""
    table = _by_index(taus)
    t1, ti = table[1].value, table[i].value
    if t1.is_zero() or ti.is_zero():
        raise ZeroDivisionError("generators must be nonzero")
    return poisson_bracket(spec, t1, ti) / (t1 * ti)
