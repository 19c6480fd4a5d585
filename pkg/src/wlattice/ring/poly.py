"""Sparse multivariate polynomials with rational coefficients.

Monomials are packed into a single Python int: every variable that has ever
been seen gets a slot in a process-wide registry and occupies a 16-bit field
(15 exponent bits plus a guard bit). Multiplying monomials is then integer
addition. Coefficients are ``int`` whenever possible and ``Fraction`` otherwise.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Callable, Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]

FIELD = 16
MASK = (1 << FIELD) - 1
MAX_EXP = (1 << (FIELD - 1)) - 1


@total_ordering
@dataclass(frozen=True)
class VarId:
    """Lattice variable: ``family`` in 0..n-2, ``site`` >= 1.

    Ordering is chain order (site first, then family), which matches
    ``chain_position`` for every rank.
    """

    family: int
    site: int

    def __post_init__(self):
        if self.family < 0 or self.site < 1:
            raise ValueError(f"invalid variable family={self.family} site={self.site}")

    def chain_key(self) -> tuple[int, int]:
        return (self.site, self.family)

    def __lt__(self, other: "VarId") -> bool:
        if not isinstance(other, VarId):
            return NotImplemented
        return self.chain_key() < other.chain_key()

    def __repr__(self) -> str:
        return f"VarId({self.family}, {self.site})"


# slot registry -------------------------------------------------------------

_LOCK = threading.Lock()
_SLOT: dict[VarId, int] = {}
_VARS: list[VarId] = []


def slot_of(v: VarId) -> int:
    s = _SLOT.get(v)
    if s is None:
        with _LOCK:
            s = _SLOT.get(v)
            if s is None:
                s = len(_VARS)
                _VARS.append(v)
                _SLOT[v] = s
    return s


def var_of(slot: int) -> VarId:
    return _VARS[slot]


def unpack(m: int) -> list[tuple[int, int]]:
    """(slot, exponent) pairs of a packed monomial, increasing slot."""
    out = []
    while m:
        s = ((m & -m).bit_length() - 1) >> 4
        sh = s << 4
        e = (m >> sh) & MASK
        out.append((s, e))
        m ^= e << sh
    return out


def pack(pairs: Iterable[tuple[int, int]]) -> int:
    m = 0
    for s, e in pairs:
        if e < 0 or e > MAX_EXP:
            raise OverflowError(f"exponent {e} out of range")
        m += e << (s << 4)
    return m


def mono_degree(m: int) -> int:
    return sum(e for _, e in unpack(m))


def _guard_mask(nbits: int) -> int:
    g = 0
    for k in range((nbits >> 4) + 1):
        g |= 1 << ((k << 4) + FIELD - 1)
    return g


def mono_divides(d: int, m: int) -> bool:
    g = _guard_mask(max(m.bit_length(), d.bit_length()))
    return ((m | g) - d) & g == g


def mono_min(a: int, b: int) -> int:
    """Componentwise minimum (gcd of two monomials)."""
    da = dict(unpack(a))
    return pack((s, min(e, da[s])) for s, e in unpack(b) if s in da)


def _norm(c: Scalar) -> Scalar:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def as_scalar(c) -> Scalar:
    if isinstance(c, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    raise TypeError(f"not an exact scalar: {c!r}")


# polynomial ----------------------------------------------------------------

# above this many term products, multiplication goes through flint
FLINT_MUL_THRESHOLD = 4000


class MultiPoly:
    """Immutable sparse polynomial over Q."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Mapping[int, Scalar] | None = None, _trusted: bool = False):
        if terms is None:
            self._t: dict[int, Scalar] = {}
        elif _trusted:
            self._t = terms  # type: ignore[assignment]
        else:
            self._t = {m: as_scalar(c) for m, c in terms.items() if c}
        self._h = None

    # constructors
    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = as_scalar(c)
        return cls({0: c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, v: VarId) -> "MultiPoly":
        return cls({1 << (slot_of(v) << 4): 1}, _trusted=True)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[VarId, int], Scalar]]) -> "MultiPoly":
        out: dict[int, Scalar] = {}
        for exps, c in terms:
            m = pack((slot_of(v), e) for v, e in exps.items() if e)
            out[m] = out.get(m, 0) + as_scalar(c)
        return cls({m: _norm(c) for m, c in out.items() if c}, _trusted=True)

    # inspection
    @property
    def raw(self) -> dict[int, Scalar]:
        return self._t

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._t.get(0, 0)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self._t.values())

    def slots(self) -> set[int]:
        s: set[int] = set()
        for m in self._t:
            s.update(x for x, _ in unpack(m))
        return s

    def variables(self) -> list[VarId]:
        return sorted(var_of(s) for s in self.slots())

    def degree(self, v: VarId | None = None) -> int:
        if not self._t:
            return -1
        if v is None:
            return max(mono_degree(m) for m in self._t)
        sh = slot_of(v) << 4
        return max((m >> sh) & MASK for m in self._t)

    def _order_key(self) -> Callable[[int], tuple]:
        # graded lex, earliest variable in chain order most significant
        order = sorted(self.slots(), key=lambda s: var_of(s).chain_key())

        def key(m: int) -> tuple:
            e = dict(unpack(m))
            vec = tuple(e.get(s, 0) for s in order)
            return (sum(vec), vec)

        return key

    def sorted_monomials(self) -> list[int]:
        """Monomials in decreasing canonical order."""
        return sorted(self._t, key=self._order_key(), reverse=True)

    def leading_monomial(self) -> int:
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        if len(self._t) == 1:
            return next(iter(self._t))
        return max(self._t, key=self._order_key())

    def leading_coefficient(self) -> Scalar:
        return self._t[self.leading_monomial()]

    def terms(self) -> list[tuple[dict[VarId, int], Scalar]]:
        return [({var_of(s): e for s, e in unpack(m)}, self._t[m]) for m in self.sorted_monomials()]

    def coefficient(self, exps: Mapping[VarId, int]) -> Scalar:
        return self._t.get(pack((slot_of(v), e) for v, e in exps.items() if e), 0)

    # arithmetic
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(other)

    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.const(other)
            except TypeError:
                return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return MultiPoly(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self._t.items()}, _trusted=True)

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def scale(self, c: Scalar) -> "MultiPoly":
        c = as_scalar(c)
        if not c:
            return MultiPoly()
        if c == 1:
            return self
        return MultiPoly({m: _norm(x * c) for m, x in self._t.items()}, _trusted=True)

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return MultiPoly()
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (m1, c1), = a.items()
            if c1 == 1:
                return MultiPoly({m1 + m: c for m, c in b.items()}, _trusted=True)
            return MultiPoly({m1 + m: _norm(c1 * c) for m, c in b.items()}, _trusted=True)
        if len(a) * len(b) > FLINT_MUL_THRESHOLD and self.is_integral() and other.is_integral():
            from .flintbridge import flint_mul

            return flint_mul(self, other)
        out: dict[int, Scalar] = {}
        get = out.get
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = m1 + m2
                out[m] = get(m, 0) + c1 * c2
        return MultiPoly({m: _norm(c) for m, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._t == ({0: _norm(Fraction(other))} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    # calculus and substitution
    def diff(self, v: VarId) -> "MultiPoly":
        sh = slot_of(v) << 4
        unit = 1 << sh
        out = {}
        for m, c in self._t.items():
            e = (m >> sh) & MASK
            if e:
                out[m - unit] = c * e
        return MultiPoly(out, _trusted=True)

    def relabel(self, mapping: Mapping[VarId, VarId] | Callable[[VarId], VarId]) -> "MultiPoly":
        """Rename variables. The map must be injective on the variables present."""
        if isinstance(mapping, Mapping):
            m_ = mapping

            def f(v: VarId) -> VarId:
                return m_.get(v, v)
        else:
            f = mapping
        new: dict[int, int] = {}
        for s in self.slots():
            new[s] = slot_of(f(var_of(s)))
        if len(set(new.values())) != len(new):
            raise ValueError("substitution is not injective on the variables present")
        if all(k == v for k, v in new.items()):
            return self
        out = {}
        for m, c in self._t.items():
            out[pack((new[s], e) for s, e in unpack(m))] = c
        return MultiPoly(out, _trusted=True)

    def evaluate(self, point: Mapping[VarId, Scalar]) -> Scalar:
        vals = {}
        for s in self.slots():
            v = var_of(s)
            if v not in point:
                raise KeyError(f"no value for {v!r}")
            vals[s] = as_scalar(point[v])
        total: Scalar = 0
        for m, c in self._t.items():
            t = c
            for s, e in unpack(m):
                t *= vals[s] ** e
            total += t
        return _norm(total) if type(total) is Fraction else total

    def subs_poly(self, v: VarId, q: "MultiPoly") -> "MultiPoly":
        """Substitute a polynomial for one variable."""
        sh = slot_of(v) << 4
        buckets: dict[int, dict[int, Scalar]] = {}
        for m, c in self._t.items():
            e = (m >> sh) & MASK
            buckets.setdefault(e, {})[m - (e << sh)] = c
        out = MultiPoly()
        qp = MultiPoly.const(1)
        for e in range(max(buckets, default=-1) + 1):
            if e in buckets:
                out = out + MultiPoly(buckets[e], _trusted=True) * qp
            qp = qp * q
        return out

    # integer content
    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive."""
        from math import gcd, lcm

        if not self._t:
            return Fraction(0)
        g = 0
        L = 1
        for c in self._t.values():
            if type(c) is int:
                g = gcd(g, c)
            else:
                g = gcd(g, c.numerator)
                L = lcm(L, c.denominator)
        return Fraction(g, L)

    def primitive(self) -> tuple[Fraction, "MultiPoly"]:
        """Split as c * p with p integral, primitive, positive leading coefficient."""
        if not self._t:
            return Fraction(0), self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        if c == 1:
            return c, self
        inv = 1 / c
        return c, MultiPoly({m: _norm(x * inv) for m, x in self._t.items()}, _trusted=True)

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        from .flintbridge import divexact

        return divexact(self, other)

    def __repr__(self) -> str:
        from .text import poly_to_text

        return f"MultiPoly({poly_to_text(self)!r})"

    def __iter__(self) -> Iterator:
        raise TypeError("MultiPoly is not iterable; use terms()")
