"""The generator tau_1 of the lattice algebra, its chain shifts and symmetry checks.

Direct orientation:

    tau_1 = N(1..2) * N(2..3) / (prod_f v_{f,2} * N(1..3))

where N(lo..hi) sums prod_f v_{f, i_f} over weakly increasing site tuples
lo <= i_0 <= i_1 <= ... <= i_{n-2} <= hi. The inverse orientation is the
reciprocal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations_with_replacement
from typing import Callable, Mapping

from .lattice import ChainShift, LatticeSpec, shift_map
from .operators import DiffOperator, apply, build_D, build_H
from .ring import MultiPoly, RatFunc, VarId
from .ring.text import poly_to_text, uses_letters


class Orientation(str, Enum):
    DIRECT = "direct"
    INVERSE = "inverse"

    @classmethod
    def parse(cls, s: "str | Orientation") -> "Orientation":
        try:
            return cls(s)
        except ValueError:
            raise ValueError(f"orientation must be 'direct' or 'inverse', got {s!r}") from None


def increasing_sum(spec: LatticeSpec, lo: int, hi: int) -> MultiPoly:
    """Sum over weakly increasing site tuples in [lo, hi] of prod_f v_{f, i_f}."""
    r = spec.families
    total = MultiPoly()
    for idx in combinations_with_replacement(range(lo, hi + 1), r):
        term = MultiPoly.const(1)
        for f, i in enumerate(idx):
            term = term * MultiPoly.var(VarId(f, i))
        total = total + term
    return total


def _direct_factors(spec: LatticeSpec) -> tuple[list[MultiPoly], list[MultiPoly]]:
    mono = MultiPoly.const(1)
    for f in range(spec.families):
        mono = mono * MultiPoly.var(VarId(f, 2))
    return ([increasing_sum(spec, 1, 2), increasing_sum(spec, 2, 3)],
            [mono, increasing_sum(spec, 1, 3)])


@dataclass(frozen=True)
class TauGenerator:
    n: int
    index: int
    orientation: Orientation
    value: RatFunc
    num_factors: tuple[MultiPoly, ...] = field(repr=False)
    den_factors: tuple[MultiPoly, ...] = field(repr=False)

    def factored_text(self) -> str:
        """Product form, e.g. (x1+x2)(x2+x3)/(x2(x1+x2+x3))."""
        letters = uses_letters(self.value.variables())

        def block(fs: tuple[MultiPoly, ...]) -> tuple[str, int]:
            parts = []
            for p in fs:
                s = poly_to_text(p, letters)
                parts.append(s if len(p) == 1 else f"({s})")
            return "".join(parts), len(fs)

        num, _ = block(self.num_factors)
        den, k = block(self.den_factors)
        if k > 1 or not (len(self.den_factors[0]) == 1):
            if not (den.startswith("(") and den.endswith(")") and den.count("(") == 1):
                den = f"({den})"
        return f"{num}/{den}"

    def relabel(self, mapping: Callable[[VarId], VarId] | Mapping[VarId, VarId], index: int) -> "TauGenerator":
        return TauGenerator(self.n, index, self.orientation, self.value.relabel(mapping),
                            tuple(p.relabel(mapping) for p in self.num_factors),
                            tuple(p.relabel(mapping) for p in self.den_factors))


def tau_closed_form(spec: LatticeSpec, orientation: "Orientation | str" = Orientation.DIRECT) -> RatFunc:
    return tau_generator(spec, 1, orientation).value


def tau_generator(spec: LatticeSpec, k: int = 1,
                  orientation: "Orientation | str" = Orientation.DIRECT) -> TauGenerator:
    orientation = Orientation.parse(orientation)
    if k < 1:
        raise ValueError("generator index starts at 1")
    num, den = _direct_factors(spec)
    if orientation is Orientation.INVERSE:
        num, den = den, num
    top = num[0] * num[1]
    bottom = den[0] * den[1]
    base = TauGenerator(spec.n, 1, orientation, RatFunc(top, bottom), tuple(num), tuple(den))
    return tau_shift(spec, base, k)


def tau_shift(spec: LatticeSpec, base: TauGenerator, k: int) -> TauGenerator:
    """tau_k from tau_1 by advancing k-1 steps along the chain."""
    if k < 1:
        raise ValueError("shift index starts at 1")
    if base.n != spec.n:
        raise ValueError("generator belongs to a different lattice")
    if k == 1:
        return base
    return base.relabel(shift_map(spec, k - 1), base.index + k - 1)


def tau_family(spec: LatticeSpec, count: int,
               orientation: "Orientation | str" = Orientation.DIRECT) -> list[TauGenerator]:
    base = tau_generator(spec, 1, orientation)
    return [tau_shift(spec, base, k) for k in range(1, count + 1)]


def period(spec: LatticeSpec) -> int:
    """Number of shifts before the support of tau_k is disjoint from tau_1."""
    return 3 * spec.families


def tau_support(spec: LatticeSpec, k: int) -> range:
    """Chain positions touched by tau_k."""
    return range(k - 1, k - 1 + period(spec))


def shifted_operators(spec: LatticeSpec, k: int) -> dict[str, DiffOperator]:
    """D_a and H_a conjugated by the shift that carries tau_1 to tau_k."""
    sh = ChainShift(spec, k - 1)
    out = {}
    for f in range(spec.families):
        out[f"D{f}"] = build_D(spec, f).relabel(sh)
        out[f"H{f}"] = build_H(spec, f).relabel(sh)
    return out


def annihilation_report(spec: LatticeSpec, tau: TauGenerator) -> dict[str, bool]:
    """Operator name -> True if it kills tau exactly."""
    return {name: apply(op, tau.value).is_zero() for name, op in shifted_operators(spec, tau.index).items()}


# symmetries ---------------------------------------------------------------------

def chain_reflection(spec: LatticeSpec, last: int) -> Callable[[VarId], VarId]:
    """Reverse the chain segment 0..last: position p goes to last - p."""

    def refl(v: VarId) -> VarId:
        p = spec.position(v)
        if p > last:
            raise ValueError(f"{v!r} lies outside the reflected segment")
        return spec.var_at(last - p)

    return refl


def bracket_reflection(spec: LatticeSpec, j: int) -> Callable[[VarId], VarId]:
    """Reflection of the joint support of tau_1 and tau_j."""
    return chain_reflection(spec, tau_support(spec, j)[-1])


def check_symmetry(f: RatFunc, mapping: Callable[[VarId], VarId] | Mapping[VarId, VarId]) -> bool:
    return f.relabel(mapping) == f
