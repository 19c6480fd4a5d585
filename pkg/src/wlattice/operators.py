"""First-order differential operators: screening-type D and grading H."""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable, Mapping, Sequence

from .lattice import LatticeSpec
from .ring import MultiPoly, RatFunc, VarId
from .ring.poly import Scalar
from .ring.text import poly_to_json_obj, poly_to_text, uses_letters, var_name

DEFAULT_SITES = (1, 2, 3)


@dataclass(frozen=True)
class DiffOperator:
    """sum_v coef_v * d/dv, stored with targets in chain order."""

    terms: tuple[tuple[VarId, MultiPoly], ...]

    @classmethod
    def from_dict(cls, coefs: Mapping[VarId, MultiPoly]) -> "DiffOperator":
        return cls(tuple(sorted(((v, c) for v, c in coefs.items() if not c.is_zero()),
                                key=lambda t: t[0].chain_key())))

    @classmethod
    def zero(cls) -> "DiffOperator":
        return cls(())

    def as_dict(self) -> dict[VarId, MultiPoly]:
        return dict(self.terms)

    def coefficient(self, v: VarId) -> MultiPoly:
        return self.as_dict().get(v, MultiPoly())

    @property
    def targets(self) -> list[VarId]:
        return [v for v, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "DiffOperator") -> "DiffOperator":
        d = self.as_dict()
        for v, c in other.terms:
            d[v] = d.get(v, MultiPoly()) + c
        return DiffOperator.from_dict(d)

    def __neg__(self) -> "DiffOperator":
        return DiffOperator(tuple((v, -c) for v, c in self.terms))

    def __sub__(self, other: "DiffOperator") -> "DiffOperator":
        return self + (-other)

    def scale(self, c: Scalar | MultiPoly) -> "DiffOperator":
        return DiffOperator.from_dict({v: p * c for v, p in self.terms})

    def on_poly(self, p: MultiPoly) -> MultiPoly:
        out = MultiPoly()
        for v, c in self.terms:
            d = p.diff(v)
            if not d.is_zero():
                out = out + c * d
        return out

    def __call__(self, f: RatFunc) -> RatFunc:
        return apply(self, f)

    def relabel(self, mapping: Mapping[VarId, VarId] | Callable[[VarId], VarId]) -> "DiffOperator":
        """Conjugate by a variable renaming (targets and coefficients)."""
        if isinstance(mapping, Mapping):
            table = mapping

            def f(v: VarId) -> VarId:
                return table.get(v, v)
        else:
            f = mapping
        return DiffOperator.from_dict({f(v): c.relabel(f) for v, c in self.terms})

    def to_json_obj(self) -> list[dict]:
        letters = uses_letters(self.variables())
        return [{"coef": poly_to_json_obj(c, letters), "var": var_name(v, letters)} for v, c in self.terms]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def variables(self) -> list[VarId]:
        vs = set(self.targets)
        for _, c in self.terms:
            vs.update(c.variables())
        return sorted(vs)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        letters = uses_letters(self.variables())
        parts = []
        for v, c in self.terms:
            s = poly_to_text(c, letters)
            parts.append(f"({s}) d/d{var_name(v, letters)}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


def _family_check(spec: LatticeSpec, family: int) -> None:
    if not (isinstance(family, int) and 0 <= family < spec.families):
        raise ValueError(f"family must be in 0..{spec.families - 1} for n={spec.n}")


def _sites(window: Iterable[int]) -> tuple[int, ...]:
    w = tuple(sorted(set(window)))
    if not w or w[0] < 1:
        raise ValueError("window must be a nonempty set of sites >= 1")
    return w


def build_D(spec: LatticeSpec, family: int, window: Iterable[int] = DEFAULT_SITES) -> DiffOperator:
    """Screening-type operator for one family over a finite block of sites.

    Each v = (family, i) contributes a_aa/2 * v^2 d/dv plus, for every window
    variable w earlier on the chain, a[family][fam(w)] * v * w d/dw. The global
    factor 2 of the screening action is dropped.
    """
    _family_check(spec, family)
    sites = _sites(window)
    a = spec.cartan
    vs = spec.window(sites)
    coefs: dict[VarId, MultiPoly] = {}
    for i in sites:
        v = VarId(family, i)
        pv = MultiPoly.var(v)
        pos = spec.position(v)
        coefs[v] = coefs.get(v, MultiPoly()) + (pv * pv).scale(a[family][family] // 2)
        for w in vs:
            if spec.position(w) >= pos:
                break
            k = a[family][w.family]
            if k:
                coefs[w] = coefs.get(w, MultiPoly()) + (pv * MultiPoly.var(w)).scale(k)
    return DiffOperator.from_dict(coefs)


def build_H(spec: LatticeSpec, family: int, window: Iterable[int] = DEFAULT_SITES,
            primitive: bool = True) -> DiffOperator:
    """Grading operator sum_b a[family][b] * sum_i v_bi d/dv_bi.

    With ``primitive`` the row is divided by the gcd of its entries, which only
    matters for n = 2 (the row (2) becomes (1)).
    """
    _family_check(spec, family)
    sites = _sites(window)
    row = spec.cartan[family]
    g = 0
    for x in row:
        g = gcd(g, x)
    if not primitive:
        g = 1
    coefs = {}
    for b, k in enumerate(row):
        if k:
            for i in sites:
                v = VarId(b, i)
                coefs[v] = MultiPoly.var(v).scale(k // g)
    return DiffOperator.from_dict(coefs)


def apply(op: DiffOperator, f: RatFunc) -> RatFunc:
    if f.is_zero() or op.is_zero():
        return RatFunc.const(0)
    n, d = f.pnum, f.pden
    on, od = op.on_poly(n), op.on_poly(d)
    if od.is_zero():
        if on.is_zero():
            return RatFunc.const(0)
        return RatFunc.from_parts(f.scalar, on, d)
    num = on * d - n * od
    if num.is_zero():
        return RatFunc.const(0)
    return RatFunc.from_parts(f.scalar, num, d * d)


def commutator(a: DiffOperator, b: DiffOperator) -> DiffOperator:
    """[a, b] = a.b - b.a, again a first-order operator."""
    targets = set(a.targets) | set(b.targets)
    coefs = {}
    for w in targets:
        coefs[w] = a.on_poly(b.coefficient(w)) - b.on_poly(a.coefficient(w))
    return DiffOperator.from_dict(coefs)


def operator_family(spec: LatticeSpec, window: Iterable[int] = DEFAULT_SITES) -> dict[str, DiffOperator]:
    """All D_a and H_a for the lattice, keyed like 'D0', 'H0', ..."""
    out = {}
    for f in range(spec.families):
        out[f"D{f}"] = build_D(spec, f, window)
        out[f"H{f}"] = build_H(spec, f, window)
    return out


def annihilates(ops: Sequence[DiffOperator], f: RatFunc) -> bool:
    return all(apply(op, f).is_zero() for op in ops)
