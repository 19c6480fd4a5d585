"""Rational functions in canonical form.

Internally a value is ``c * pn / pd`` with ``pn`` and ``pd`` coprime, integral,
primitive and with positive leading coefficient. The triple is unique, so
equality and hashing are structural. Public ``num``/``den`` are rescaled so
that ``den`` has leading coefficient 1.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Union

from .flintbridge import divexact, int_gcd
from .poly import MultiPoly, Scalar, VarId, as_scalar

_ONE = MultiPoly.const(1)


class PoleError(ZeroDivisionError):
    """Evaluation at a point where the denominator vanishes."""


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Gcd over Q, normalized to leading coefficient 1."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    _, pa = a.primitive()
    _, pb = b.primitive()
    g = int_gcd(pa, pb)
    return g.scale(Fraction(1) / g.leading_coefficient())


def _primitive_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    g = int_gcd(a, b)
    return g if g.leading_coefficient() > 0 else -g


class RatFunc:
    __slots__ = ("_c", "_n", "_d", "_h")

    def __init__(self, num: Union[MultiPoly, Scalar] = 0, den: Union[MultiPoly, Scalar] = 1):
        if not isinstance(num, MultiPoly):
            num = MultiPoly.const(num)
        if not isinstance(den, MultiPoly):
            den = MultiPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        cn, pn = num.primitive()
        cd, pd = den.primitive()
        self._set(*self._reduce(cn / cd if cn else Fraction(0), pn, pd))

    def _set(self, c: Fraction, pn: MultiPoly, pd: MultiPoly) -> None:
        self._c = c
        self._n = pn
        self._d = pd
        self._h = None

    @staticmethod
    def _reduce(c: Fraction, pn: MultiPoly, pd: MultiPoly):
        if not c:
            return Fraction(0), _ONE, _ONE
        if pd.is_constant():
            return c, pn, _ONE
        if pn.is_constant():
            return c, _ONE, pd
        g = _primitive_gcd(pn, pd)
        if not g.is_constant():
            pn = divexact(pn, g)
            pd = divexact(pd, g)
        return c, pn, pd

    @classmethod
    def _raw(cls, c: Fraction, pn: MultiPoly, pd: MultiPoly) -> "RatFunc":
        """Trusted constructor; pn and pd must already be coprime."""
        obj = cls.__new__(cls)
        if not c:
            obj._set(Fraction(0), _ONE, _ONE)
            return obj
        cn, pn = pn.primitive()
        cd, pd = pd.primitive()
        obj._set(Fraction(c) * cn / cd, pn, pd)
        return obj

    @classmethod
    def from_parts(cls, c: Scalar, num: MultiPoly, den: MultiPoly) -> "RatFunc":
        """c * num / den with num, den arbitrary (den nonzero)."""
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        cn, pn = num.primitive()
        cd, pd = den.primitive()
        obj = cls.__new__(cls)
        obj._set(*cls._reduce(Fraction(as_scalar(c)) * cn / cd if cn else Fraction(0), pn, pd))
        return obj

    @classmethod
    def var(cls, v: VarId) -> "RatFunc":
        return cls._raw(Fraction(1), MultiPoly.var(v), _ONE)

    @classmethod
    def const(cls, c: Scalar) -> "RatFunc":
        return cls._raw(Fraction(as_scalar(c)), _ONE, _ONE)

    # canonical parts
    @property
    def scalar(self) -> Fraction:
        return self._c

    @property
    def pnum(self) -> MultiPoly:
        return self._n

    @property
    def pden(self) -> MultiPoly:
        return self._d

    @property
    def num(self) -> MultiPoly:
        return self._n.scale(self._c / self._d.leading_coefficient())

    @property
    def den(self) -> MultiPoly:
        return self._d.scale(Fraction(1) / self._d.leading_coefficient())

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return self._n.is_constant() and self._d.is_constant()

    def is_polynomial(self) -> bool:
        return self._d.is_constant()

    def variables(self) -> list[VarId]:
        return sorted(set(self._n.variables()) | set(self._d.variables()))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = RatFunc.const(other)
        if isinstance(other, MultiPoly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self._c == other._c and self._n == other._n and self._d == other._d

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash((self._c, self._n, self._d))
        return self._h

    # arithmetic
    @staticmethod
    def _lift(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MultiPoly):
            return RatFunc(x)
        return RatFunc.const(x)

    def __neg__(self) -> "RatFunc":
        obj = RatFunc.__new__(RatFunc)
        obj._set(-self._c, self._n, self._d)
        return obj

    def __add__(self, other) -> "RatFunc":
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        if not o._c:
            return self
        if not self._c:
            return o
        # a/b + c/d with g = gcd(b, d)
        b, d = self._d, o._d
        if b == d:
            g, b1, d1 = b, _ONE, _ONE
        else:
            g = _primitive_gcd(b, d)
            b1 = divexact(b, g) if not g.is_constant() else b
            d1 = divexact(d, g) if not g.is_constant() else d
        num = self._n.scale(self._c) * d1 + o._n.scale(o._c) * b1
        if num.is_zero():
            return RatFunc.const(0)
        cn, pn = num.primitive()
        # common factors of num with b*d can only come from g
        if not g.is_constant():
            h = _primitive_gcd(pn, g)
            if not h.is_constant():
                pn = divexact(pn, h)
                g = divexact(g, h)
        obj = RatFunc.__new__(RatFunc)
        obj._set(*RatFunc._reduce_sign(cn, pn, b1 * d1 * g))
        return obj

    @staticmethod
    def _reduce_sign(c: Fraction, pn: MultiPoly, pd: MultiPoly):
        cd, pd = pd.primitive()
        return c / cd, pn, pd

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        if not self._c or not o._c:
            return RatFunc.const(0)
        # cross-cancel a/b * c/d
        a, b, c, d = self._n, self._d, o._n, o._d
        g1 = _primitive_gcd(a, d) if not (a.is_constant() or d.is_constant()) else _ONE
        g2 = _primitive_gcd(c, b) if not (c.is_constant() or b.is_constant()) else _ONE
        if not g1.is_constant():
            a, d = divexact(a, g1), divexact(d, g1)
        if not g2.is_constant():
            c, b = divexact(c, g2), divexact(b, g2)
        obj = RatFunc.__new__(RatFunc)
        cn, pn = (a * c).primitive()
        cd, pd = (b * d).primitive()
        obj._set(self._c * o._c * cn / cd, pn, pd)
        return obj

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self._c:
            raise ZeroDivisionError("inverse of zero")
        obj = RatFunc.__new__(RatFunc)
        cn, pn = self._d.primitive()
        cd, pd = self._n.primitive()
        obj._set(cn / (self._c * cd), pn, pd)
        return obj

    def __truediv__(self, other) -> "RatFunc":
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if not isinstance(k, int):
            raise TypeError("integer exponents only")
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        obj = RatFunc.__new__(RatFunc)
        obj._set(base._c ** k, base._n ** k, base._d ** k)
        return obj

    # calculus
    def diff(self, v: VarId) -> "RatFunc":
        dn = self._n.diff(v)
        dd = self._d.diff(v)
        if dd.is_zero():
            if dn.is_zero():
                return RatFunc.const(0)
            return RatFunc.from_parts(self._c, dn, self._d)
        num = dn * self._d - self._n * dd
        return RatFunc.from_parts(self._c, num, self._d * self._d)

    def relabel(self, mapping: Mapping[VarId, VarId] | Callable[[VarId], VarId]) -> "RatFunc":
        # an injective renaming preserves coprimality; only signs can change
        return RatFunc._raw(self._c, self._n.relabel(mapping), self._d.relabel(mapping))

    def evaluate(self, point: Mapping[VarId, Scalar]) -> Fraction:
        d = self._d.evaluate(point)
        if d == 0:
            raise PoleError("denominator vanishes at the given point")
        return self._c * Fraction(self._n.evaluate(point)) / d

    def __repr__(self) -> str:
        from .text import to_text

        return f"RatFunc({to_text(self)!r})"

    def __str__(self) -> str:
        from .text import to_text

        return to_text(self)


# functional spellings

def ratfunc_arith(op: str, f: RatFunc, g: RatFunc) -> RatFunc:
    if op in ("+", "add"):
        return f + g
    if op in ("-", "sub"):
        return f - g
    if op in ("*", "mul"):
        return f * g
    if op in ("/", "div"):
        return f / g
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(f: RatFunc, v: VarId) -> RatFunc:
    return f.diff(v)


def substitute(f: RatFunc, mapping: Mapping[VarId, VarId] | Callable[[VarId], VarId]) -> RatFunc:
    return f.relabel(mapping)


def evaluate(f: RatFunc, point: Mapping[VarId, Scalar]) -> Fraction:
    return f.evaluate(point)
