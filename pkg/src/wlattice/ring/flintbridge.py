"""Conversion to python-flint for gcd, exact division and large products.

Each call builds a compact context over only the variables involved, so the
flint side never sees the (possibly large) global slot registry.
"""
from __future__ import annotations

from math import gcd as igcd

import flint

from .poly import MultiPoly, mono_divides, mono_min, pack, unpack


def _context(polys: list[MultiPoly]):
    slots = sorted(set().union(*(p.slots() for p in polys)))
    names = tuple(f"v{i}" for i in range(len(slots)))
    ctx = flint.fmpz_mpoly_ctx.get(names, "lex")
    return ctx, slots


def _to_flint(p: MultiPoly, ctx, slots: list[int]):
    idx = {s: i for i, s in enumerate(slots)}
    k = len(slots)
    d = {}
    for m, c in p.raw.items():
        e = [0] * k
        for s, x in unpack(m):
            e[idx[s]] = x
        d[tuple(e)] = c
    return ctx.from_dict(d)


def _from_flint(q, slots: list[int]) -> MultiPoly:
    shifts = [s << 4 for s in slots]
    out = {}
    for e, c in zip(q.monoms(), q.coeffs()):
        m = 0
        for x, sh in zip(e, shifts):
            if x:
                m |= int(x) << sh
        out[m] = int(c)
    return MultiPoly(out, _trusted=True)


class FlintRing:
    """A fixed flint context for a batch of computations that stay on the flint side."""

    def __init__(self, polys: list[MultiPoly]):
        self.ctx, self.slots = _context(polys)

    def __call__(self, p: MultiPoly):
        _require_integral(p)
        return _to_flint(p, self.ctx, self.slots)

    def one(self):
        return self.ctx.from_dict({(0,) * len(self.slots): 1}) if self.slots else self.ctx.from_dict({(): 1})


def _require_integral(*ps: MultiPoly) -> None:
    for p in ps:
        if not p.is_integral():
            raise ValueError("flint bridge expects integer coefficients")


def flint_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    _require_integral(a, b)
    ctx, slots = _context([a, b])
    return _from_flint(_to_flint(a, ctx, slots) * _to_flint(b, ctx, slots), slots)


def _term_content(p: MultiPoly) -> int:
    it = iter(p.raw)
    g = next(it)
    for m in it:
        if not g:
            break
        g = mono_min(g, m)
    return g


def int_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Gcd over Z of integer polynomials (sign unnormalized, content kept)."""
    _require_integral(a, b)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.is_monomial() or b.is_monomial():
        mono, other = (a, b) if a.is_monomial() else (b, a)
        (m, c), = mono.raw.items()
        g = abs(c)
        for x in other.raw.values():
            g = igcd(g, x)
            if g == 1:
                break
        t = m
        for x in other.raw:
            if not t:
                break
            t = mono_min(t, x)
        return MultiPoly({t: g}, _trusted=True)
    if a.is_constant() or b.is_constant():
        g = 0
        for x in list(a.raw.values()) + list(b.raw.values()):
            g = igcd(g, x)
        return MultiPoly.const(g)
    ctx, slots = _context([a, b])
    return _from_flint(_to_flint(a, ctx, slots).gcd(_to_flint(b, ctx, slots)), slots)


def divexact(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """a / b when b divides a exactly (coefficients over Q)."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    ca, pa = a.primitive()
    cb, pb = b.primitive()
    if pb.is_monomial():
        (m, _), = pb.raw.items()
        if not all(mono_divides(m, x) for x in pa.raw):
            raise ArithmeticError("division is not exact")
        q = MultiPoly({x - m: c for x, c in pa.raw.items()}, _trusted=True)
    else:
        ctx, slots = _context([pa, pb])
        q, r = divmod(_to_flint(pa, ctx, slots), _to_flint(pb, ctx, slots))
        if r != 0:
            raise ArithmeticError("division is not exact")
        q = _from_flint(q, slots)
    return q.scale(ca / cb)
