"""Laurent monomial bases and decomposition results."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterator, Mapping

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class LaurentBasis:
    m: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("need at least one generator")
        if self.lo > self.hi:
            raise ValueError("empty exponent range")

    @cached_property
    def tuples(self) -> tuple[Exponent, ...]:
        # first generator's exponent varies slowest
        return tuple(product(range(self.lo, self.hi + 1), repeat=self.m))

    def __len__(self) -> int:
        return (self.hi - self.lo + 1) ** self.m

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self.tuples)

    def widened(self, step: int = 1) -> "LaurentBasis":
        return LaurentBasis(self.m, self.lo - step, self.hi + step)


def enumerate_basis(m: int, lo: int, hi: int) -> LaurentBasis:
    return LaurentBasis(m, lo, hi)


def _sci(x: Fraction) -> str:
    """Scientific notation that does not underflow for tiny probabilities."""
    if x == 0:
        return "0"
    lg = math.log10(x.numerator) - math.log10(x.denominator)
    e = math.floor(lg)
    return f"{10 ** (lg - e):.3f}e{e:+d}"


@dataclass(frozen=True)
class Verification:
    ok: bool
    mode: str  # "symbolic" or "sampled"
    samples: int = 0
    bound: int = 0
    degree: int = 0
    witness: dict | None = None

    @property
    def label(self) -> str:
        return "symbolic" if self.mode == "symbolic" else f"sampled({self.samples})"

    @property
    def error_bound(self) -> Fraction | None:
        """Schwartz-Zippel bound (degree / bound) ** samples for a false positive."""
        if self.mode != "sampled" or not self.bound:
            return None
        return Fraction(self.degree, self.bound) ** self.samples


@dataclass(frozen=True)
class DecompResult:
    m: int
    coefficients: tuple[tuple[Exponent, Fraction], ...]
    orientation: str | None = None
    verification: Verification | None = None
    basis: LaurentBasis | None = field(default=None, compare=False)

    @classmethod
    def from_map(cls, m: int, coeffs: Mapping[Exponent, Fraction], **kw) -> "DecompResult":
        items = tuple(sorted(((tuple(e), Fraction(c)) for e, c in coeffs.items() if c)))
        return cls(m, items, **kw)

    def as_dict(self) -> dict[Exponent, Fraction]:
        return dict(self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def exponent_range(self) -> tuple[list[int], list[int]]:
        """Per-generator (min, max) exponents, always bracketing 0."""
        lo = [0] * self.m
        hi = [0] * self.m
        for e, _ in self.coefficients:
            for k, x in enumerate(e):
                lo[k] = min(lo[k], x)
                hi[k] = max(hi[k], x)
        return lo, hi

    def to_json_obj(self) -> dict:
        obj: dict = {"coeffs": [{"e": list(e), "c": str(c)} for e, c in self.coefficients]}
        obj["orientation"] = self.orientation
        if self.verification is not None:
            obj["verified"] = self.verification.label
            eb = self.verification.error_bound
            if eb is not None:
                obj["error_bound"] = _sci(eb)
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def to_text(self, names: list[str] | None = None) -> str:
        if not self.coefficients:
            return "0"
        names = names or [f"t{k + 1}" for k in range(self.m)]
        terms = sorted(self.coefficients, key=lambda t: (-sum(t[0]), [-x for x in t[0]]))
        out = ""
        for e, c in terms:
            body = "".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
            mag = abs(c)
            coef = "" if (mag == 1 and body) else (str(mag) if mag.denominator == 1 else f"({mag})")
            sign = "-" if c < 0 else "+"
            out += (sign if out or c < 0 else "") + coef + body
        return out
