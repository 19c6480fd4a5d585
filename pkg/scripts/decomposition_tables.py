"""Decompose {tau_1, tau_j} for sl2 and sl3 and time the fixed f2/f6 problems.

    python3 -u scripts/decomposition_tables.py [--seed S] [--orientation inverse|direct]
"""
import argparse
import time

from wlattice import reference as ref
from wlattice.bracket import poisson_bracket
from wlattice.decompose import DecompConfig, LaurentBasis, solve_decomposition
from wlattice.generators import period, tau_family
from wlattice.lattice import build_lattice
from wlattice.ring import from_text


def table(n: int, hi: int, cfg: DecompConfig, orientation: str) -> None:
    s = build_lattice(n)
    P = period(s)
    gens = [t.value for t in tau_family(s, P + 1, orientation)]
    print(f"\nsl{n}, {orientation} generators, exponents in [0, {hi}]")
    for j in range(2, P + 2):
        t0 = time.perf_counter()
        F = poisson_bracket(s, gens[0], gens[j - 1])
        r = solve_decomposition(F, gens[:j], LaurentBasis(j, 0, hi), cfg, orientation)
        label = r.verification.label if r.verification else "-"
        print(f"  F_{j} = {r.to_text()}    [{label}, {time.perf_counter() - t0:.2f}s]")


def fixed_problem(name: str, F: str, gens: list[str], lo: int, hi: int, cfg: DecompConfig) -> None:
    t0 = time.perf_counter()
    g = [from_text(k) for k in gens]
    b = LaurentBasis(len(g), lo, hi)
    r = solve_decomposition(from_text(F), g, b, cfg)
    print(f"  {name}: {len(b)} tuples -> {r.to_text()}    "
          f"[{r.verification.label}, {time.perf_counter() - t0:.2f}s]")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--orientation", default="inverse", choices=("inverse", "direct"))
    args = ap.parse_args()
    cfg = DecompConfig(seed=args.seed)
    table(2, 3, cfg, args.orientation)
    table(3, 2, cfg, args.orientation)
    print("\nfixed problems with supplied generators")
    fixed_problem("f2", ref.PROBLEM_F2, ref.PROBLEM_F2_GENS, 0, 3, DecompConfig(seed=args.seed, verify="symbolic"))
    fixed_problem("f6", ref.PROBLEM_F6, ref.PROBLEM_F6_GENS, -1, 1, DecompConfig(seed=args.seed, verify="sampled"))


if __name__ == "__main__":
    main()
