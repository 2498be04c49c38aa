"""Command-line front end.

Exit codes: 0 success, 1 failed check, 2 parse/usage error, 3 semantic error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .chern import HypersurfaceSpec, chern_hypersurface, euler_char, euler_poly
from .checks import SUITES, run_suite
from .errors import ParseError, SizeLimit, StructypesError
from .finset import LabeledSet
from .groupoid import GradedGroupoid, action_groupoid, gcard, stuff_gs
from .intspecies import IntSpecies, embed, icounts, iegf
from .operators import IntOperator, SpeciesOperator, VOp, apply, apply_mixed, iapply, vop
from .parse import OpChain, parse_operator, parse_program, parse_species
from .species import counts, egf, enumerate_structures

MAX_TERMS = 16
MAX_SET = 7


def exact(x):
    """JSON value for an exact number: int when integral, else "p/q"."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def _terms(n: int) -> int:
    if not 0 <= n <= MAX_TERMS:
        raise SizeLimit(f"--terms must be between 0 and {MAX_TERMS}, got {n}")
    return n


def _set_size(n: int) -> int:
    if not 0 <= n <= MAX_SET:
        raise SizeLimit(f"set size must be between 0 and {MAX_SET}, got {n}")
    return n


def _parse_set(text: str) -> LabeledSet:
    atoms = [a.strip() for a in text.split(",") if a.strip()] if text else []
    _set_size(len(atoms))
    return LabeledSet(atoms)


def _coeff_text(values) -> str:
    return ", ".join(str(exact(v)) for v in values)


def act(op, value, sys, up_to: int):
    """Apply a parsed operator to a species or signed species."""
    if isinstance(op, OpChain):
        for step in reversed(op.steps):
            value = act(step, value, sys, up_to)
        return value
    if isinstance(op, VOp):
        phi = value if isinstance(value, IntSpecies) else embed(value, sys)
        return vop(phi, up_to)
    if isinstance(value, IntSpecies):
        return iapply(op, value, up_to)
    if isinstance(op, IntOperator):
        return apply_mixed(op, value, sys, up_to)
    return apply(op, value, sys, up_to)


# --------------------------------------------------------------------------
# subcommands; each returns (document, text)


def cmd_egf(args):
    n = _terms(args.terms)
    value, sys = parse_program(args.expr)
    if isinstance(value, IntSpecies):
        series, cs = iegf(value, n), icounts(value, n)
    else:
        series, cs = egf(value, sys, n), counts(value, sys, n)
    doc = {"command": "egf", "expr": args.expr, "terms": n, "egf": [exact(c) for c in series], "counts": cs}
    return doc, _coeff_text(series)


def cmd_count(args):
    value, sys = parse_program(args.expr)
    if args.n is not None:
        _terms(args.n)
        ns = [args.n]
    else:
        ns = list(range(_terms(args.terms)))
    top = max(ns) + 1 if ns else 0
    cs = icounts(value, top) if isinstance(value, IntSpecies) else counts(value, sys, top)
    values = [cs[n] for n in ns]
    doc = {"command": "count", "expr": args.expr, "n": ns, "counts": values}
    return doc, _coeff_text(values)


def cmd_enumerate(args):
    expr, sys = parse_species(args.expr)
    s = _parse_set(args.set)
    structs = enumerate_structures(expr, sys, s)
    doc = {"command": "enumerate", "expr": args.expr, "set": list(s.atoms), "structures": [x.sexpr for x in structs]}
    return doc, "\n".join(x.sexpr for x in structs)


def cmd_apply_op(args):
    n = _terms(args.terms)
    op = parse_operator(args.op)
    value, sys = parse_program(args.expr)
    result = act(op, value, sys, n)
    if isinstance(result, IntSpecies):
        series, cs, shown = iegf(result, n), icounts(result, n), str(result)
    else:
        series, cs, shown = egf(result, sys, n), counts(result, sys, n), str(result)
    doc = {
        "command": "apply-op",
        "op": args.op,
        "expr": args.expr,
        "result": shown,
        "egf": [exact(c) for c in series],
        "counts": cs,
    }
    return doc, f"{shown}\n{_coeff_text(series)}"


def cmd_groupoid_card(args):
    expr, sys = parse_species(args.expr)
    n = _set_size(args.n)
    g = action_groupoid(expr, sys, n)
    doc = {
        "command": "groupoid-card",
        "expr": args.expr,
        "n": n,
        "components": [[c, a] for c, a in g.components],
        "cardinality": exact(gcard(g)),
    }
    return doc, str(exact(gcard(g)))


def cmd_stuff_gs(args):
    expr, sys = parse_species(args.expr)
    n = args.terms
    _set_size(max(n - 1, 0))
    series = stuff_gs(GradedGroupoid.from_species(expr, sys, n))
    doc = {"command": "stuff-gs", "expr": args.expr, "terms": n, "series": [exact(c) for c in series]}
    return doc, _coeff_text(series)


def cmd_chern(args):
    spec = HypersurfaceSpec(args.n, args.d)
    c = chern_hypersurface(spec)
    doc = {"n": spec.n, "d": spec.d, "chern": list(c.coeffs), "euler": euler_char(spec)}
    return doc, str(c)


def cmd_euler(args):
    spec = HypersurfaceSpec(args.n, args.d)
    chi = euler_char(spec)
    return {"n": spec.n, "d": spec.d, "euler": chi}, str(chi)


def cmd_euler_poly(args):
    e = euler_poly(args.n)
    return {"n": e.n, "coeffs": list(e.coeffs)}, str(e.as_series().truncate(e.n + 1)).rsplit(" + O(", 1)[0]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="structypes", description="Species, signed species and hypersurface Chern classes.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="emit a JSON document")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("egf", cmd_egf, "exponential generating series")
    sp.add_argument("expr")
    sp.add_argument("--terms", type=int, default=10)

    sp = add("count", cmd_count, "structure counts")
    sp.add_argument("expr")
    sp.add_argument("--n", type=int)
    sp.add_argument("--terms", type=int, default=10)

    sp = add("enumerate", cmd_enumerate, "list the structures on a set")
    sp.add_argument("expr")
    sp.add_argument("--set", default="")

    sp = add("apply-op", cmd_apply_op, "apply an operator to a (signed) species")
    sp.add_argument("op")
    sp.add_argument("expr")
    sp.add_argument("--terms", type=int, default=10)

    sp = add("groupoid-card", cmd_groupoid_card, "cardinality of the action groupoid in degree n")
    sp.add_argument("expr")
    sp.add_argument("--n", type=int, required=True)

    sp = add("stuff-gs", cmd_stuff_gs, "generating series from groupoid cardinalities")
    sp.add_argument("expr")
    sp.add_argument("--terms", type=int, default=6)

    for name, fn, help in [
        ("chern", cmd_chern, "total Chern class of a smooth hypersurface"),
        ("euler", cmd_euler, "Euler characteristic of a smooth hypersurface"),
    ]:
        sp = add(name, fn, help)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--d", type=int, required=True)

    sp = add("euler-poly", cmd_euler_poly, "Euler polynomial of hypersurfaces in P^n")
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("check", help="run identity suites")
    sp.add_argument("suite", choices=sorted(SUITES) + ["all"])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=None)
    return p


def _emit_error(args, exc, code) -> int:
    name = type(exc).__name__
    if getattr(args, "json", False):
        print(dumps({"error": name, "message": str(exc)}))
    else:
        print(f"error: {name}: {exc}", file=sys.stderr)
    return code


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        results = run_suite(args.suite)
        if args.json:
            print(dumps({"command": "check", "suite": args.suite, "results": [
                {"name": r.name, "ok": r.ok, "cases": r.cases, "failure": r.failure} for r in results]}))
        else:
            for r in results:
                print(r.line())
        return 0 if all(r.ok for r in results) else 1
    try:
        doc, text = args.fn(args)
    except ParseError as exc:
        return _emit_error(args, exc, 2)
    except (StructypesError, ValueError) as exc:
        return _emit_error(args, exc, 3)
    print(dumps(doc) if args.json else text)
    return 0


def main() -> None:
    sys.exit(run())
