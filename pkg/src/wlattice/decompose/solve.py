"""Writing a rational function as a Laurent polynomial in given generators.

The coefficients are found from exact evaluations at random integer points;
the answer is then verified either symbolically (a polynomial identity after
clearing denominators) or at fresh points drawn from a much larger range.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from ..ring import MultiPoly, PoleError, RatFunc, VarId, var_name
from ..ring.text import uses_letters
from ..ring.flintbridge import FlintRing
from .basis import DecompResult, Exponent, LaurentBasis, Verification
from .linalg import InconsistentSystem, solve_exact


class NotRepresentable(ValueError):
    """No Laurent polynomial on the basis reproduces the target."""


class DegenerateSampling(RuntimeError):
    """Could not find enough pole-free sample points."""


class VerificationFailed(ArithmeticError):
    def __init__(self, msg: str, witness: dict | None = None):
        super().__init__(msg)
        self.witness = witness


@dataclass(frozen=True)
class DecompConfig:
    lo: int = 0
    hi: int = 2
    samples: int | None = None  # default: basis size + oversample
    oversample: int = 8
    seed: int = 0
    bound: int = 11
    verify: str = "auto"  # auto | symbolic | sampled | none
    verify_samples: int = 50
    verify_bound: int = 1 << 31
    symbolic_max_vars: int = 9
    widen_cap: int = 2
    max_redraws: int = 1000
    solver: str = "auto"


@dataclass(frozen=True)
class LinearSystem:
    """Integer rows: row i of the rational system scaled by a positive constant."""

    rows: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]
    points: tuple[tuple[tuple[VarId, int], ...], ...]


def _variables(F: RatFunc, gens: Sequence[RatFunc]) -> list[VarId]:
    vs = set(F.variables())
    for g in gens:
        vs.update(g.variables())
    return sorted(vs)


def _int_parts(f: RatFunc) -> tuple[MultiPoly, MultiPoly]:
    """Integral (num, den) with f = num / den."""
    c = f.scalar
    return f.pnum.scale(c.numerator), f.pden.scale(c.denominator)


def _gen_values(gens_int, point) -> list[tuple[int, int]] | None:
    vals = []
    for n, d in gens_int:
        dv = d.evaluate(point)
        nv = n.evaluate(point)
        if dv == 0 or nv == 0:
            return None
        vals.append((nv, dv))
    return vals


def _laurent_row(vals: list[tuple[int, int]], lo: int, hi: int) -> list[int]:
    """prod_k g_k^{e_k} over the basis, times prod_k n_k^{-lo'} d_k^{hi'}."""
    lo_, hi_ = min(lo, 0), max(hi, 0)
    row = [1]
    for n, d in vals:
        col = [n ** (e - lo_) * d ** (hi_ - e) for e in range(lo, hi + 1)]
        row = [x * y for x in row for y in col]
    return row


def _scale_of(vals: list[tuple[int, int]], lo: int, hi: int) -> int:
    lo_, hi_ = min(lo, 0), max(hi, 0)
    s = 1
    for n, d in vals:
        s *= n ** (-lo_) * d ** hi_
    return s


def build_system(F: RatFunc, gens: Sequence[RatFunc], basis: LaurentBasis, samples: int,
                 seed: int, bound: int = 11, max_redraws: int = 1000) -> LinearSystem:
    if samples < len(basis):
        raise ValueError("need at least as many samples as basis elements")
    if len(gens) != basis.m:
        raise ValueError("basis dimension does not match the number of generators")
    if any(g.is_zero() for g in gens):
        raise ValueError("generators must be nonzero")
    vars_ = _variables(F, gens)
    gens_int = [_int_parts(g) for g in gens]
    fn, fd = _int_parts(F)
    rng = random.Random(seed)
    rows, rhs, pts = [], [], []
    redraws = 0
    while len(rows) < samples:
        point = {v: rng.randint(1, bound) for v in vars_}
        vals = _gen_values(gens_int, point)
        fdv = fd.evaluate(point)
        if vals is None or fdv == 0:
            redraws += 1
            if redraws > max_redraws:
                raise DegenerateSampling("too many sample points hit a pole or zero")
            continue
        # row * scale = F(P) * scale, cleared of the F denominator
        scale = _scale_of(vals, basis.lo, basis.hi)
        fnv = fn.evaluate(point)
        row = _laurent_row(vals, basis.lo, basis.hi)
        if fdv < 0:
            fdv, fnv = -fdv, -fnv
        rows.append(tuple(x * fdv for x in row))
        rhs.append(fnv * scale)
        pts.append(tuple(point.items()))
    return LinearSystem(tuple(rows), tuple(rhs), tuple(pts))


# verification -------------------------------------------------------------------

def laurent_identity_holds(F: RatFunc, gens: Sequence[RatFunc], result: DecompResult) -> bool:
    """Exact check of F == sum_e c_e prod_k g_k^e_k after clearing all denominators."""
    lo, hi = result.exponent_range()
    gi = [_int_parts(g) for g in gens]
    fn, fd = _int_parts(F)
    R = FlintRing([fn, fd] + [p for pair in gi for p in pair])
    fg = [(R(n), R(d)) for n, d in gi]
    L = 1
    for _, c in result.coefficients:
        L = lcm(L, c.denominator)
    cache: dict[tuple[int, int, int], object] = {}

    def pw(k: int, which: int, e: int):
        key = (k, which, e)
        if key not in cache:
            cache[key] = fg[k][which] ** e
        return cache[key]

    num = R.one() * 0
    for e, c in result.coefficients:
        t = R.one() * int(c * L)
        for k, x in enumerate(e):
            t = t * pw(k, 0, x - lo[k]) * pw(k, 1, hi[k] - x)
        num = num + t
    den = R.one() * L
    for k in range(len(gens)):
        den = den * pw(k, 0, -lo[k]) * pw(k, 1, hi[k])
    return (R(fd) * num - R(fn) * den).is_zero()


def _laurent_value(result: DecompResult, gvals: list[Fraction]) -> Fraction:
    total = Fraction(0)
    for e, c in result.coefficients:
        t = c
        for g, x in zip(gvals, e):
            t *= g ** x
        total += t
    return total


def _degree_bound(F: RatFunc, gens: Sequence[RatFunc], result: DecompResult) -> int:
    lo, hi = result.exponent_range()
    dg = sum(max(g.pnum.degree(), g.pden.degree()) * (h - l) for g, l, h in zip(gens, lo, hi))
    return max(F.pnum.degree(), F.pden.degree()) + dg


def verify_identity(F: RatFunc, gens: Sequence[RatFunc], result: DecompResult, mode: str = "symbolic",
                    samples: int = 50, bound: int = 1 << 31, seed: int = 0,
                    max_redraws: int = 1000) -> Verification:
    if mode == "symbolic":
        if result.is_zero():
            ok = F.is_zero()
        else:
            ok = laurent_identity_holds(F, gens, result)
        witness = None
        if not ok:
            v = verify_identity(F, gens, result, "sampled", samples=5, bound=bound, seed=seed)
            witness = v.witness
        return Verification(ok, "symbolic", witness=witness)
    if mode != "sampled":
        raise ValueError(f"unknown verification mode {mode!r}")
    vars_ = _variables(F, gens)
    rng = random.Random(f"verify:{seed}")
    done = redraws = 0
    while done < samples:
        point = {v: rng.randint(1, bound) for v in vars_}
        try:
            fv = F.evaluate(point)
            gvals = [g.evaluate(point) for g in gens]
        except PoleError:
            gvals = None
        if gvals is None or any(g == 0 for g in gvals):
            redraws += 1
            if redraws > max_redraws:
                raise DegenerateSampling("too many verification points hit a pole")
            continue
        if _laurent_value(result, gvals) != fv:
            letters = uses_letters(vars_)
            w = {var_name(k, letters): v for k, v in point.items()}
            return Verification(False, "sampled", samples, bound, _degree_bound(F, gens, result), w)
        done += 1
    return Verification(True, "sampled", samples, bound, _degree_bound(F, gens, result))


# driver ------------------------------------------------------------------------

def _solve_on_basis(F: RatFunc, gens: Sequence[RatFunc], basis: LaurentBasis,
                    config: DecompConfig) -> dict[Exponent, Fraction]:
    n = config.samples if config.samples is not None else len(basis) + config.oversample
    n = max(n, len(basis))
    system = build_system(F, gens, basis, n, config.seed, config.bound, config.max_redraws)
    sol = solve_exact(system.rows, system.rhs, config.solver)
    return {e: c for e, c in zip(basis.tuples, sol.x) if c}


def choose_verification(F: RatFunc, gens: Sequence[RatFunc], config: DecompConfig) -> str:
    if config.verify != "auto":
        return config.verify
    return "symbolic" if len(_variables(F, gens)) <= config.symbolic_max_vars else "sampled"


def solve_decomposition(F: RatFunc, gens: Sequence[RatFunc], basis: LaurentBasis | None = None,
                        config: DecompConfig = DecompConfig(),
                        orientation: str | None = None) -> DecompResult:
    """Find exact Laurent coefficients with F = sum_e c_e prod_k gens_k^e_k.

    Widens the exponent range up to ``config.widen_cap`` times when the target
    is not representable on the current basis.
    """
    if basis is None:
        basis = LaurentBasis(len(gens), config.lo, config.hi)
    mode = choose_verification(F, gens, config)
    if F.is_zero():
        ver = Verification(True, "symbolic") if mode != "none" else None
        return DecompResult(basis.m, (), orientation, ver, basis)
    last: Exception | None = None
    for step in range(config.widen_cap + 1):
        b = basis.widened(step) if step else basis
        try:
            coeffs = _solve_on_basis(F, gens, b, config)
        except InconsistentSystem as exc:
            last = exc
            continue
        result = DecompResult.from_map(b.m, coeffs, orientation=orientation, basis=b)
        if mode == "none":
            return result
        ver = verify_identity(F, gens, result, mode, config.verify_samples,
                              config.verify_bound, config.seed, config.max_redraws)
        if not ver.ok:
            raise VerificationFailed("decomposition does not reproduce the target", ver.witness)
        return DecompResult(result.m, result.coefficients, orientation, ver, b)
    raise NotRepresentable(
        f"not representable with exponents in [{basis.lo - config.widen_cap}, {basis.hi + config.widen_cap}]"
    ) from last


def solve_by_coefficients(F: RatFunc, gens: Sequence[RatFunc], basis: LaurentBasis,
                          orientation: str | None = None) -> DecompResult:
    """Coefficient matching on the cleared identity; exact but only for small inputs."""
    lo_, hi_ = min(basis.lo, 0), max(basis.hi, 0)
    gi = [_int_parts(g) for g in gens]
    fn, fd = _int_parts(F)
    den = MultiPoly.const(1)
    for n, d in gi:
        den = den * n ** (-lo_) * d ** hi_
    target = fn * den
    columns = []
    for e in basis:
        t = fd
        for (n, d), x in zip(gi, e):
            t = t * n ** (x - lo_) * d ** (hi_ - x)
        columns.append(t)
    monos = sorted(set(target.raw).union(*(c.raw for c in columns)))
    A = [[c.raw.get(m, 0) for c in columns] for m in monos]
    b = [target.raw.get(m, 0) for m in monos]
    try:
        sol = solve_exact(A, b)
    except InconsistentSystem as exc:
        raise NotRepresentable("not representable on this basis") from exc
    coeffs = {e: c for e, c in zip(basis.tuples, sol.x) if c}
    return DecompResult.from_map(basis.m, coeffs, orientation=orientation,
                                 verification=Verification(True, "symbolic"), basis=basis)
