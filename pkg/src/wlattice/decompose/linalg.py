"""Exact solution of rational linear systems.

Small systems use Bareiss fraction-free elimination. Wide systems are solved
modulo several 31-bit primes with numpy, lifted by CRT and rational
reconstruction, and the candidate is then checked exactly against the integer
system, so every returned solution is certified.

Free columns are set to zero, giving the solution supported on the
lexicographically first column basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Sequence

import numpy as np

BAREISS_MAX_COLS = 24


class InconsistentSystem(ArithmeticError):
    """The right-hand side is not in the column space."""


@dataclass(frozen=True)
class Solution:
    x: tuple[Fraction, ...]
    rank: int
    pivots: tuple[int, ...]
    method: str


def integer_rows(A: Sequence[Sequence], b: Sequence) -> tuple[list[list[int]], list[int]]:
    """Scale each equation by the lcm of its denominators."""
    rows, rhs = [], []
    for row, bi in zip(A, b):
        L = 1
        for x in row:
            if isinstance(x, Fraction):
                L = lcm(L, x.denominator)
        if isinstance(bi, Fraction):
            L = lcm(L, bi.denominator)
        rows.append([int(x * L) for x in row])
        rhs.append(int(bi * L))
    return rows, rhs


# Bareiss -----------------------------------------------------------------------

def bareiss_solve(A: Sequence[Sequence[int]], b: Sequence[int]) -> Solution:
    ncols = len(A[0]) if A else 0
    M = [list(r) + [bi] for r, bi in zip(A, b)]
    nrows = len(M)
    r = 0
    prev = 1
    pivots = []
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        Mr = M[r]
        piv = Mr[c]
        for i in range(r + 1, nrows):
            Mi = M[i]
            mi = Mi[c]
            if mi == 0:
                if piv != prev:
                    M[i] = [(piv * x) // prev for x in Mi]
                continue
            M[i] = [(piv * Mi[k] - mi * Mr[k]) // prev for k in range(ncols + 1)]
        prev = piv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    if any(M[i][ncols] for i in range(r, nrows)):
        raise InconsistentSystem("right-hand side outside the column space")
    x = [Fraction(0)] * ncols
    for k in range(r - 1, -1, -1):
        row = M[k]
        s = Fraction(row[ncols])
        for j in pivots[k + 1:]:
            if x[j]:
                s -= row[j] * x[j]
        x[pivots[k]] = s / row[pivots[k]]
    return Solution(tuple(x), r, tuple(pivots), "bareiss")


# modular -----------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        y = pow(a, d, n)
        if y in (1, n - 1):
            continue
        for _ in range(s - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


def primes_below(limit: int, count: int) -> list[int]:
    out = []
    n = limit - 1
    while len(out) < count:
        if _is_prime(n):
            out.append(n)
        n -= 1
    return out


PRIMES = primes_below(1 << 31, 64)


def _rref_mod(Aint: list[list[int]], bint: list[int], p: int):
    M = np.array([[x % p for x in row] + [bi % p] for row, bi in zip(Aint, bint)], dtype=np.int64)
    nrows, ncols1 = M.shape
    ncols = ncols1 - 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), -1, p)
        # the pivot row is zero left of c, so only columns >= c change
        M[r, c:] = (M[r, c:] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            sub = M[rows, c:]
            sub -= (col[rows, None] * M[r, c:][None, :]) % p
            sub %= p
            M[rows, c:] = sub
        pivots.append(c)
        r += 1
    consistent = not M[r:, ncols].any()
    x = np.zeros(ncols, dtype=np.int64)
    if pivots:
        x[pivots] = M[:r, ncols]
    return r, tuple(pivots), consistent, x


def _rational_reconstruct(a: int, m: int) -> Fraction | None:
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _check(Aint: list[list[int]], bint: list[int], x: list[Fraction]) -> bool:
    L = 1
    for xi in x:
        L = lcm(L, xi.denominator)
    X = [int(xi * L) for xi in x]
    nz = [j for j, v in enumerate(X) if v]
    for row, bi in zip(Aint, bint):
        if sum(row[j] * X[j] for j in nz) != bi * L:
            return False
    return True


def modular_solve(Aint: list[list[int]], bint: list[int], max_primes: int = 40) -> Solution:
    best_rank, best_piv = -1, None
    residues: list[tuple[int, np.ndarray]] = []
    bad = 0
    for p in PRIMES[:max_primes]:
        rank, piv, consistent, x = _rref_mod(Aint, bint, p)
        if not consistent:
            bad += 1
            if bad >= 2:
                raise InconsistentSystem("right-hand side outside the column space")
            continue
        # prefer higher rank, then the lexicographically first pivot set
        if rank > best_rank or (rank == best_rank and piv < best_piv):
            best_rank, best_piv, residues = rank, piv, []
        elif piv != best_piv:
            continue
        residues.append((p, x))
        m = 1
        for q, _ in residues:
            m *= q
        cand = []
        ok = True
        for j in range(len(x)):
            # CRT, incremental
            a, mod = 0, 1
            for q, xs in residues:
                v = int(xs[j])
                t = ((v - a) * pow(mod, -1, q)) % q
                a += mod * t
                mod *= q
            fr = _rational_reconstruct(a, m)
            if fr is None:
                ok = False
                break
            cand.append(fr)
        if ok and _check(Aint, bint, cand):
            return Solution(tuple(cand), best_rank, best_piv, "modular")
    raise ArithmeticError("modular solver did not converge")


def solve_exact(A: Sequence[Sequence], b: Sequence, method: str = "auto") -> Solution:
    """Solve A x = b exactly over Q; free columns are set to zero."""
    if not A:
        raise ValueError("empty system")
    Aint, bint = integer_rows(A, b)
    if method == "auto":
        method = "bareiss" if len(Aint[0]) <= BAREISS_MAX_COLS else "modular"
    if method == "bareiss":
        return bareiss_solve(Aint, bint)
    if method == "modular":
        return modular_solve(Aint, bint)
    raise ValueError(f"unknown method {method!r}")
