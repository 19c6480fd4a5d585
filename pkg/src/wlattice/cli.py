"""Command line front end.

Exit codes: 0 success, 1 invalid input, 2 an identity or verification failed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence, TextIO

from .bracket import bracket_family, gamma, poisson_bracket
from .decompose import (DecompConfig, DecompResult, LaurentBasis, NotRepresentable, VerificationFailed,
                        solve_decomposition)
from .generators import (TauGenerator, bracket_reflection, check_symmetry, period, shifted_operators,
                         tau_family, tau_generator)
from .lattice import LatticeSpec, bracket_table, build_lattice
from .operators import DiffOperator, apply
from .ring import ParseError, RatFunc, to_text, var_name
from .ring.text import to_json_obj
from .ring.text import uses_letters

ENV_SEED = "WLATTICE_SEED"
ENV_VERIFY = "WLATTICE_VERIFY"

EPILOG = f"""\
environment:
  {ENV_SEED}     default for --seed (decompose, reproduce)
  {ENV_VERIFY}   default for --verify: auto, symbolic, sampled or none

exit codes: 0 ok, 1 invalid input, 2 identity or verification failure
"""


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


class IdentityFailure(ArithmeticError):
    """Raised after output is written when a reported identity does not hold."""


# output --------------------------------------------------------------------------

def emit(fmt: str, value: Any) -> str:
    """Serialize a domain value as text or compact JSON."""
    if fmt == "json":
        return json.dumps(_json_obj(value), separators=(",", ":"))
    if isinstance(value, TauGenerator):
        return value.factored_text()
    if isinstance(value, RatFunc):
        return to_text(value)
    if isinstance(value, DecompResult):
        return value.to_text()
    if isinstance(value, DiffOperator):
        return value.to_text()
    if isinstance(value, str):
        return value
    return json.dumps(_json_obj(value), separators=(",", ":"))


def _json_obj(value: Any) -> Any:
    if isinstance(value, TauGenerator):
        return to_json_obj(value.value)
    if isinstance(value, RatFunc):
        return to_json_obj(value)
    if isinstance(value, DecompResult):
        return value.to_json_obj()
    if isinstance(value, DiffOperator):
        return value.to_json_obj()
    if isinstance(value, dict):
        return {k: _json_obj(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_obj(v) for v in value]
    return value


# argument handling ------------------------------------------------------------------

def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _spec(args) -> LatticeSpec:
    if args.lattice_json is not None:
        try:
            return LatticeSpec.from_json(args.lattice_json)
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed lattice JSON: {exc}") from None
    return build_lattice(args.rank)


def _positive(name: str, k: int) -> int:
    if k < 1:
        raise UsageError(f"{name} must be at least 1")
    return k


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wlattice", description="Exact computations on the lattice generators.",
                epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, orientation: str | None = None):
        sp.add_argument("--rank", type=int, default=2, help="n of sl_n (default 2)")
        sp.add_argument("--lattice-json", help='lattice as JSON, e.g. {"n":3,"cartan":[[2,-1],[-1,2]]}')
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if orientation:
            sp.add_argument("--orientation", choices=("direct", "inverse"), default=orientation,
                            help=f"generator orientation (default {orientation})")
        sp.formatter_class = argparse.RawDescriptionHelpFormatter
        sp.epilog = EPILOG

    sp = sub.add_parser("lattice", help="Cartan data and bracket coefficients")
    common(sp)
    sp.add_argument("--sites", type=int, default=2, help="number of sites to tabulate (default 2)")

    sp = sub.add_parser("tau", help="the generator tau_k")
    common(sp, "direct")
    sp.add_argument("--index", type=int, default=1)

    sp = sub.add_parser("annihilate", help="apply the (shifted) D and H operators to tau_k")
    common(sp, "direct")
    sp.add_argument("--index", type=int, default=1)
    sp.add_argument("--show-operators", action="store_true", help="also print the operators")

    sp = sub.add_parser("bracket", help="{tau_i, tau_j}")
    common(sp, "inverse")
    sp.add_argument("--i", type=int, default=1)
    sp.add_argument("--j", type=int, default=2)
    sp.add_argument("--all", action="store_true", help="every j in the locality window, as a JSON array")

    sp = sub.add_parser("gamma", help="{tau_1, tau_i} / (tau_1 tau_i)")
    common(sp, "inverse")
    sp.add_argument("--index", type=int, default=2)

    sp = sub.add_parser("decompose", help="{tau_i, tau_j} as a Laurent polynomial in tau_i..tau_j")
    common(sp, "inverse")
    sp.set_defaults(format="json")
    sp.add_argument("--i", type=int, default=1)
    sp.add_argument("--j", type=int, default=2)
    sp.add_argument("--min-exp", type=int, default=0)
    sp.add_argument("--max-exp", type=int, default=2)
    sp.add_argument("--seed", type=int, default=None, help=f"sampling seed (default ${ENV_SEED} or 0)")
    sp.add_argument("--verify", choices=("auto", "symbolic", "sampled", "none"), default=None,
                    help=f"verification mode (default ${ENV_VERIFY} or auto)")
    sp.add_argument("--bound", type=int, default=11, help="sample coordinates in [1, bound]")
    sp.add_argument("--widen", type=int, default=2, help="max exponent-range widenings")

    sp = sub.add_parser("symmetry", help="reflection symmetry of {tau_1, tau_j} and of the generators")
    common(sp, "inverse")
    sp.add_argument("--j", type=int, default=None, help="default: last nonzero bracket")

    sp = sub.add_parser("reproduce", help="run the acceptance table")
    sp.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    sp.add_argument("--seed", type=int, default=None, help=f"default ${ENV_SEED} or 0")
    sp.formatter_class = argparse.RawDescriptionHelpFormatter
    sp.epilog = EPILOG
    return p


# commands ---------------------------------------------------------------------------

def _cmd_lattice(args) -> str:
    spec = _spec(args)
    sites = range(1, _positive("--sites", args.sites) + 1)
    rows = [(u, v, c) for u, v, c in bracket_table(spec, sites) if spec.position(u) < spec.position(v)]
    letters = uses_letters(spec.window(sites))
    if args.format == "json":
        obj = spec.to_json_obj()
        obj["brackets"] = [{"u": var_name(u, letters), "v": var_name(v, letters), "c": c} for u, v, c in rows]
        return emit("json", obj)
    lines = [spec.to_json()]
    for u, v, c in rows:
        a, b = var_name(u, letters), var_name(v, letters)
        lines.append(f"{{{a}, {b}}} = {c} {a} {b}" if c else f"{{{a}, {b}}} = 0")
    return "\n".join(lines)


def _cmd_tau(args) -> str:
    t = tau_generator(_spec(args), _positive("--index", args.index), args.orientation)
    return emit(args.format, t)


def _cmd_annihilate(args) -> str:
    spec = _spec(args)
    t = tau_generator(spec, _positive("--index", args.index), args.orientation)
    ops = shifted_operators(spec, t.index)
    values = {name: apply(op, t.value) for name, op in ops.items()}
    failed = [k for k, v in values.items() if not v.is_zero()]
    if args.format == "json":
        obj: dict[str, Any] = {"index": t.index, "orientation": t.orientation.value,
                               "results": {k: emit("text", v) for k, v in values.items()}}
        if args.show_operators:
            obj["operators"] = {k: op.to_json_obj() for k, op in ops.items()}
        out = emit("json", obj)
    else:
        lines = []
        for name, v in values.items():
            if args.show_operators:
                lines.append(f"{name} = {ops[name].to_text()}")
            lines.append(f"{name} tau_{t.index} = {emit('text', v)}")
        lines.append("all zero" if not failed else f"nonzero: {', '.join(failed)}")
        out = "\n".join(lines)
    if failed:
        raise IdentityFailure(out)
    return out


def _cmd_bracket(args) -> str:
    spec = _spec(args)
    i = _positive("--i", args.i)
    if args.all:
        taus = tau_family(spec, i + period(spec), args.orientation)
        res = bracket_family(spec, taus, i)
        return emit("json", [{"i": r.i, "j": r.j, "value": r.value} for r in res])
    j = _positive("--j", args.j)
    taus = tau_family(spec, max(i, j), args.orientation)
    return emit(args.format, poisson_bracket(spec, taus[i - 1].value, taus[j - 1].value))


def _cmd_gamma(args) -> str:
    spec = _spec(args)
    i = _positive("--index", args.index)
    taus = tau_family(spec, max(i, 1), args.orientation)
    return emit(args.format, gamma(spec, taus, i))


def _cmd_decompose(args) -> str:
    spec = _spec(args)
    i, j = _positive("--i", args.i), _positive("--j", args.j)
    if j < i:
        raise UsageError("--j must be at least --i")
    if args.min_exp > args.max_exp:
        raise UsageError("--min-exp must not exceed --max-exp")
    seed = args.seed if args.seed is not None else _env_int(ENV_SEED, 0)
    verify = args.verify or os.environ.get(ENV_VERIFY) or "auto"
    if verify not in ("auto", "symbolic", "sampled", "none"):
        raise UsageError(f"{ENV_VERIFY} must be auto, symbolic, sampled or none")
    taus = tau_family(spec, j, args.orientation)
    gens = [t.value for t in taus[i - 1:j]]
    F = poisson_bracket(spec, gens[0], gens[-1])
    cfg = DecompConfig(lo=args.min_exp, hi=args.max_exp, seed=seed, verify=verify, bound=args.bound,
                       widen_cap=args.widen)
    result = solve_decomposition(F, gens, LaurentBasis(len(gens), args.min_exp, args.max_exp), cfg,
                                 orientation=args.orientation)
    if args.format == "text":
        names = [f"t{k}" for k in range(i, j + 1)]
        return result.to_text(names)
    return emit("json", result)


def _cmd_symmetry(args) -> str:
    spec = _spec(args)
    j = args.j if args.j is not None else period(spec)
    if j < 2:
        raise UsageError("--j must be at least 2")
    taus = tau_family(spec, j, args.orientation)
    refl = bracket_reflection(spec, j)
    F = poisson_bracket(spec, taus[0].value, taus[-1].value)
    report = {"bracket": check_symmetry(F, refl)}
    for a in range(1, (j + 1) // 2 + 1):
        b = j + 1 - a
        report[f"tau_{a}<->tau_{b}"] = taus[b - 1].value.relabel(refl) == taus[a - 1].value
    if args.format == "json":
        out = emit("json", {"j": j, "orientation": args.orientation, "checks": report})
    else:
        lines = [f"{k}: {'ok' if v else 'FAIL'}" for k, v in report.items()]
        out = "\n".join(lines)
    if not all(report.values()):
        raise IdentityFailure(out)
    return out


def _cmd_reproduce(args) -> str:
    from .reproduce import run_checks

    seed = args.seed if args.seed is not None else _env_int(ENV_SEED, 0)
    checks = run_checks(seed, args.only)
    lines = [c.line() for c in checks]
    passed = sum(c.ok for c in checks)
    lines.append(f"{passed}/{len(checks)} criteria passed")
    out = "\n".join(lines)
    if passed != len(checks):
        raise IdentityFailure(out)
    return out


COMMANDS = {
    "lattice": _cmd_lattice, "tau": _cmd_tau, "annihilate": _cmd_annihilate, "bracket": _cmd_bracket,
    "gamma": _cmd_gamma, "decompose": _cmd_decompose, "symmetry": _cmd_symmetry, "reproduce": _cmd_reproduce,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        text = COMMANDS[args.command](args)
    except IdentityFailure as exc:
        print(str(exc), file=out)
        return 2
    except (VerificationFailed, NotRepresentable) as exc:
        witness = getattr(exc, "witness", None)
        print(f"verification failed: {exc}" + (f"; witness {witness}" if witness else ""), file=err)
        return 2
    except (UsageError, ParseError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    print(text, file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
