"""Which tau_k are killed by the unshifted D operators on a long window?

The chain shift preserves the bracket only when it moves whole sites or when
n <= 3, so for n >= 4 the plain D_a kill tau_k only for k = 1 mod (n-1).
The shift-conjugated operators kill every tau_k.

    python3 scripts/operator_shifts.py [--max-rank 5]
"""
import argparse

from wlattice.generators import annihilation_report, period, tau_family
from wlattice.lattice import build_lattice
from wlattice.operators import apply, build_D


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-rank", type=int, default=5)
    args = ap.parse_args()
    for n in range(2, args.max_rank + 1):
        s = build_lattice(n)
        r = s.families
        plain, conj = [], []
        for t in tau_family(s, period(s)):
            last_site = (t.index - 1 + period(s) - 1) // r + 1
            sites = range(1, last_site + 2)
            if all(apply(build_D(s, f, sites), t.value).is_zero() for f in range(r)):
                plain.append(t.index)
            if all(annihilation_report(s, t).values()):
                conj.append(t.index)
        print(f"sl{n}: plain D kill tau_k for k in {plain}; shifted D and H kill k in {conj}")


if __name__ == "__main__":
    main()
