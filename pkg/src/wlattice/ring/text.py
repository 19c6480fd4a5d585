"""Text and JSON forms of polynomials and rational functions.

Text uses juxtaposition for products and ``^`` for powers, e.g.
``(x1x2+x2^2)/(x2+x3)``. Variables of families 0..3 are written x, y, z, k
followed by the site; any expression touching family 4 or higher switches to
``v{family}_{site}`` for every variable. The parser also accepts ``*``, ``**``,
spaces and capitalized names, so formulas pasted from a CAS session load as-is.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Iterable

from .poly import MultiPoly, VarId, unpack, var_of
from .ratfunc import RatFunc

LETTERS = "xyzk"


def uses_letters(vars_: Iterable[VarId]) -> bool:
    return all(v.family < len(LETTERS) for v in vars_)


def var_name(v: VarId, letters: bool = True) -> str:
    if letters and v.family < len(LETTERS):
        return f"{LETTERS[v.family]}{v.site}"
    return f"v{v.family}_{v.site}"


_NAME_RE = re.compile(r"^(?:([xyzkXYZK])(\d+)|[vV](\d+)_(\d+))$")


def parse_var(name: str) -> VarId:
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"not a lattice variable name: {name!r}")
    if m.group(1):
        return VarId(LETTERS.index(m.group(1).lower()), int(m.group(2)))
    return VarId(int(m.group(3)), int(m.group(4)))


def _coef_text(c: Fraction | int, has_vars: bool) -> str:
    c = Fraction(c)
    if has_vars and c == 1:
        return ""
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c})" if has_vars else str(c)


def poly_to_text(p: MultiPoly, letters: bool | None = None) -> str:
    if p.is_zero():
        return "0"
    if letters is None:
        letters = uses_letters(p.variables())
    parts = []
    for m in p.sorted_monomials():
        c = Fraction(p.raw[m])
        sign = "-" if c < 0 else "+"
        ve = sorted(((var_of(s), e) for s, e in unpack(m)), key=lambda t: t[0].chain_key())
        body = "".join(var_name(v, letters) + (f"^{e}" if e > 1 else "") for v, e in ve)
        parts.append((sign, _coef_text(abs(c), bool(ve)) + body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, t in parts[1:]:
        out += sign + t
    return out


_ATOMIC = re.compile(r"^(?:[a-z]\d+(?:_\d+)?(?:\^\d+)?|\d+)$")


def _wrap(s: str) -> str:
    return s if _ATOMIC.match(s) else f"({s})"


def to_text(f: RatFunc | MultiPoly) -> str:
    if isinstance(f, MultiPoly):
        return poly_to_text(f)
    letters = uses_letters(f.variables())
    num, den = f.num, f.den
    if den == 1:
        return poly_to_text(num, letters)
    ns = poly_to_text(num, letters)
    ds = poly_to_text(den, letters)
    return f"{_wrap(ns)}/{_wrap(ds)}"


# JSON ---------------------------------------------------------------------

def poly_to_json_obj(p: MultiPoly, letters: bool = True) -> list[dict[str, Any]]:
    out = []
    for m in p.sorted_monomials():
        exps = {var_name(var_of(s), letters): e
                for s, e in sorted(unpack(m), key=lambda t: var_of(t[0]).chain_key())}
        out.append({"c": str(Fraction(p.raw[m])), "m": exps})
    return out


def poly_from_json_obj(obj: list[dict[str, Any]]) -> MultiPoly:
    terms = []
    for t in obj:
        terms.append(({parse_var(k): int(e) for k, e in t["m"].items()}, Fraction(t["c"])))
    return MultiPoly.from_terms(terms)


def to_json_obj(f: RatFunc) -> dict[str, Any]:
    letters = uses_letters(f.variables())
    return {"num": poly_to_json_obj(f.num, letters), "den": poly_to_json_obj(f.den, letters)}


def to_json(f: RatFunc) -> str:
    return json.dumps(to_json_obj(f), separators=(",", ":"))


def from_json_obj(obj: dict[str, Any]) -> RatFunc:
    return RatFunc(poly_from_json_obj(obj["num"]), poly_from_json_obj(obj["den"]))


def from_json(s: str) -> RatFunc:
    return from_json_obj(json.loads(s))


# parser ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\d+(?:_\d+)?)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    pass


def _tokenize(s: str) -> list[tuple[str, str]]:
    toks = []
    pos = 0
    s = s.rstrip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {pos}: {s[pos:pos + 10]!r}")
        if m.group(1):
            toks.append(("num", m.group(1)))
        elif m.group(2):
            toks.append(("var", m.group(2)))
        else:
            op = m.group(3)
            toks.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, s: str):
        self.toks = _tokenize(s)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", "")

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op: str):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r}, got {t[1]!r}")

    def parse(self) -> RatFunc:
        if not self.toks:
            raise ParseError("empty expression")
        r = self.expr()
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return r

    def expr(self) -> RatFunc:
        r = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            r = r + t if op == "+" else r - t
        return r

    def _starts_atom(self) -> bool:
        k, v = self.peek()
        return k in ("num", "var") or (k, v) == ("op", "(")

    def term(self) -> RatFunc:
        r = self.unary()
        while True:
            k, v = self.peek()
            if (k, v) == ("op", "*"):
                self.take()
                r = r * self.unary()
            elif (k, v) == ("op", "/"):
                self.take()
                d = self.unary()
                if d.is_zero():
                    raise ParseError("division by zero")
                r = r / d
            elif self._starts_atom():
                r = r * self.power()
            else:
                return r

    def unary(self) -> RatFunc:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            k, v = self.take()
            if k != "num":
                raise ParseError("exponent must be an integer literal")
            e = int(v)
            if neg and base.is_zero():
                raise ParseError("division by zero")
            return base ** (-e if neg else e)
        return base

    def atom(self) -> RatFunc:
        k, v = self.take()
        if k == "num":
            return RatFunc.const(int(v))
        if k == "var":
            try:
                return RatFunc.var(parse_var(v))
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        if (k, v) == ("op", "("):
            r = self.expr()
            self.expect(")")
            return r
        raise ParseError(f"unexpected token {v!r}")


def from_text(s: str) -> RatFunc:
    return _Parser(s).parse()


def parse_poly(s: str) -> MultiPoly:
    f = from_text(s)
    if not f.is_polynomial():
        raise ParseError("expression is not a polynomial")
    return f.num
