"""Compare the Cartan bracket on sl5 with the variant that also couples Y and K.

Prints where the two bracket tables differ and which D/H operators still
annihilate tau_1 under each convention.

    python3 scripts/sl5_convention.py
"""
from wlattice.generators import tau_generator
from wlattice.lattice import bracket_table, build_lattice, printed_sl5_variant
from wlattice.operators import apply, operator_family
from wlattice.ring import var_name


def main() -> None:
    cartan, variant = build_lattice(5), printed_sl5_variant()
    print("Cartan:  ", cartan.to_json())
    print("variant: ", variant.to_json())
    diffs = [(u, v, a, b) for (u, v, a), (_, _, b) in zip(bracket_table(cartan, (1, 2)), bracket_table(variant, (1, 2)))
             if a != b and cartan.position(u) < cartan.position(v)]
    print(f"\n{len(diffs)} differing pairs on sites 1..2:")
    for u, v, a, b in diffs:
        print(f"  {{{var_name(u)}, {var_name(v)}}}: {a} vs {b}")
    tau = tau_generator(cartan, 1).value
    for label, spec in (("Cartan", cartan), ("variant", variant)):
        res = {k: apply(op, tau).is_zero() for k, op in operator_family(spec).items()}
        killed = [k for k, ok in res.items() if ok]
        print(f"\n{label}: tau_1 killed by {', '.join(killed)}; not by {', '.join(k for k in res if k not in killed) or 'none'}")


if __name__ == "__main__":
    main()
