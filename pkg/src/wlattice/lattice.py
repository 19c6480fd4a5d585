"""Cartan data, the variable chain and the log-canonical bracket coefficients.

Variables ``VarId(family, site)`` sit on a single chain
``x1, y1, z1, ..., x2, y2, ...`` with position ``(site-1)(n-1) + family``.
For two variables ``u`` before ``v`` on the chain the bracket is
``{u, v} = a[fu][fv] * u * v`` where ``a`` is the Cartan matrix.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .ring import VarId

Matrix = tuple[tuple[int, ...], ...]


def cartan_matrix(rank: int) -> Matrix:
    """Cartan matrix of type A_rank."""
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank))
        for i in range(rank)
    )


@dataclass(frozen=True)
class LatticeSpec:
    n: int
    cartan: Matrix

    def __post_init__(self):
        r = self.n - 1
        if self.n < 2:
            raise ValueError("rank n must be at least 2")
        a = self.cartan
        if len(a) != r or any(len(row) != r for row in a):
            raise ValueError(f"Cartan matrix must be {r}x{r}")
        for i in range(r):
            if a[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(r):
                if a[i][j] != a[j][i]:
                    raise ValueError("Cartan matrix must be symmetric")
                if i != j and a[i][j] not in (0, -1):
                    raise ValueError("off-diagonal Cartan entries must be 0 or -1")

    @property
    def families(self) -> int:
        return self.n - 1

    @property
    def is_standard(self) -> bool:
        return self.cartan == cartan_matrix(self.n - 1)

    def check_var(self, v: VarId) -> None:
        if v.family >= self.families:
            raise ValueError(f"family {v.family} out of range for n={self.n}")

    def position(self, v: VarId) -> int:
        self.check_var(v)
        return (v.site - 1) * self.families + v.family

    def var_at(self, pos: int) -> VarId:
        if pos < 0:
            raise ValueError("chain positions start at 0")
        return VarId(pos % self.families, pos // self.families + 1)

    def chain(self, start: int, stop: int) -> list[VarId]:
        """Variables at chain positions start..stop-1."""
        return [self.var_at(p) for p in range(start, stop)]

    def window(self, sites: Iterable[int]) -> list[VarId]:
        """All variables on the given sites, in chain order."""
        return sorted(VarId(f, s) for s in sites for f in range(self.families))

    def to_json_obj(self) -> dict:
        return {"n": self.n, "cartan": [list(r) for r in self.cartan]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, s: str) -> "LatticeSpec":
        obj = json.loads(s)
        return cls(obj["n"], tuple(tuple(r) for r in obj["cartan"]))


def build_lattice(n: int) -> LatticeSpec:
    if not isinstance(n, int) or n < 2:
        raise ValueError("rank n must be an integer >= 2")
    return LatticeSpec(n, cartan_matrix(n - 1))


def poisson_coeff(spec: LatticeSpec, u: VarId, v: VarId) -> int:
    """c(u, v) with {u, v} = c(u, v) u v."""
    pu, pv = spec.position(u), spec.position(v)
    if pu == pv:
        return 0
    a = spec.cartan[u.family][v.family]
    return a if pu < pv else -a


def q_exponent(spec: LatticeSpec, u: VarId, v: VarId) -> int:
    """e with u v = q^e v u; its classical limit is ``poisson_coeff``."""
    pu, pv = spec.position(u), spec.position(v)
    if pu == pv:
        return 0
    a = spec.cartan[u.family][v.family]
    return a if pu < pv else -a


def printed_sl5_variant() -> LatticeSpec:
    """sl5 data with the Y-K pair treated as adjacent.

    Kept only to compare against the Cartan convention; see
    ``scripts/sl5_convention.py``.
    """
    a = [list(r) for r in cartan_matrix(4)]
    a[1][3] = a[3][1] = -1
    return LatticeSpec(5, tuple(tuple(r) for r in a))


@dataclass(frozen=True)
class ChainShift:
    """Advance every variable ``k`` steps along the chain."""

    spec: LatticeSpec
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("shift must be non-negative")

    def __call__(self, v: VarId) -> VarId:
        return self.spec.var_at(self.spec.position(v) + self.k)

    def __matmul__(self, other: "ChainShift") -> "ChainShift":
        if other.spec != self.spec:
            raise ValueError("cannot compose shifts of different lattices")
        return ChainShift(self.spec, self.k + other.k)

    def on(self, vars_: Iterable[VarId]) -> dict[VarId, VarId]:
        return {v: self(v) for v in vars_}


def shift_map(spec: LatticeSpec, k: int) -> ChainShift:
    return ChainShift(spec, k)


def bracket_table(spec: LatticeSpec, sites: Iterable[int]) -> Iterator[tuple[VarId, VarId, int]]:
    vs = spec.window(sites)
    for u in vs:
        for v in vs:
            yield u, v, poisson_coeff(spec, u, v)
