"""Command-line frontend.

Exit status: 0 success / all checks pass, 1 verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import GROUP, OSC, AlphabetMismatch
from .antipode import UnsupportedLattice
from .hopf import coproduct
from .parser import ArityError, IndexOutOfRange, ParseError, parse_element, parse_generator
from .relations import GROUP_VARIANTS, build_group_rules, build_oscillator_rules
from .rewrite import normal_order, normal_order_tensor
from .scalar import Laurent
from .verify import SUITES, reports_to_json, run_all, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ALGEBRAS = {"osc": OSC, "group": GROUP}


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _specialise(x, value):
    if value is None:
        return x
    return x.map_coefficients(lambda c: Laurent.const(c.evaluate(value)))


def _systems(n: int, variant):
    return {OSC: build_oscillator_rules(n), GROUP: build_group_rules(n, variant)}


def cmd_normalize(args, out) -> int:
    alphabet = ALGEBRAS[args.algebra]
    x = parse_element(args.expr, args.lattice, alphabet)
    nf = normal_order(x, _systems(args.lattice, args.variant)[alphabet])
    nf = _specialise(nf, args.q)
    if args.format == "json":
        doc = {
            "command": "normalize",
            "lattice": args.lattice,
            "algebra": args.algebra,
            "input": args.expr,
            "result": nf.to_json(),
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(nf, file=out)
    return EXIT_OK


def cmd_coproduct(args, out) -> int:
    x = parse_generator(args.gen, args.lattice)
    d = coproduct(x, args.lattice)
    if args.reduce:
        sys_ = build_group_rules(args.lattice, args.variant)
        d = normal_order_tensor(d, (sys_, sys_))
    d = _specialise(d, args.q)
    if args.format == "json":
        doc = {"command": "coproduct", "lattice": args.lattice, "generator": str(x), "result": d.to_json()}
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(d, file=out)
    return EXIT_OK


def cmd_dump_rules(args, out) -> int:
    system = _systems(args.lattice, args.variant)[ALGEBRAS[args.algebra]]
    if args.format == "json":
        print(json.dumps(system.to_json(), indent=2), file=out)
    else:
        for rule in system:
            print(f"{rule}    [{rule.tag}]", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.all == bool(args.suite):
        raise UsageError("give exactly one of --suite NAME or --all")
    if args.all:
        reports = run_all(args.lattice, args.variant)
    else:
        if args.suite == "antipode_n1" and args.lattice != 1:
            raise UsageError("antipode_n1 only runs with --lattice 1")
        reports = [run_suite(args.suite, args.lattice, args.variant)]
    if args.format == "json":
        if args.all:
            print(reports_to_json(reports, args.timings), file=out)
        else:
            print(reports[0].to_json(args.timings), file=out)
    else:
        for rep in reports:
            print(f"== {rep.suite} (n={rep.lattice}): {rep.status.upper()} "
                  f"[{len(rep.checks) - len(rep.failures())}/{len(rep.checks)}]", file=out)
            for c in rep.checks:
                line = f"  {'PASS' if c.passed else 'FAIL'} {c.id}"
                if args.timings:
                    line += f"  ({c.ms:.1f} ms)"
                print(line, file=out)
                if c.residual is not None:
                    print(f"       residual: {c.residual}", file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--q", type=_rational, default=argparse.SUPPRESS, metavar="RATIONAL",
                        help="substitute q after full reduction")
    common.add_argument("--variant", choices=[v for v in GROUP_VARIANTS if v], default=argparse.SUPPRESS,
                        help="altered group relations (negative controls / analysis)")

    p = argparse.ArgumentParser(
        prog="bigl",
        description="Normal ordering and Hopf-axiom verification for the q-deformed "
                    "boson algebra with its inhomogeneous invariance quantum group.",
        parents=[common],
    )
    sub = p.add_subparsers(dest="command", required=True)

    def lattice(sp, default=None):
        sp.add_argument("--lattice", type=int, default=default, required=default is None, metavar="N")

    sp = sub.add_parser("normalize", parents=[common], help="normal-order an expression")
    lattice(sp)
    sp.add_argument("--algebra", choices=tuple(ALGEBRAS), required=True)
    sp.add_argument("--expr", required=True)
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("verify", parents=[common], help="run verification suites")
    lattice(sp, default=2)
    sp.add_argument("--suite", choices=SUITES)
    sp.add_argument("--all", action="store_true", help="every suite for n = 1..N")
    sp.add_argument("--timings", action="store_true", help="record wall time per check")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("coproduct", parents=[common], help="print Delta of a generator")
    lattice(sp)
    sp.add_argument("--gen", required=True, help="e.g. 'al(1,2)' or 'f(1)'")
    sp.add_argument("--reduce", action="store_true", help="normal-order both legs")
    sp.set_defaults(func=cmd_coproduct)

    sp = sub.add_parser("dump-rules", parents=[common], help="print the rewrite rules")
    lattice(sp)
    sp.add_argument("--algebra", choices=tuple(ALGEBRAS), required=True)
    sp.set_defaults(func=cmd_dump_rules)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    for name, default in (("format", "text"), ("q", None), ("variant", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if args.lattice is not None and args.lattice < 1:
        print("error: --lattice must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (ParseError, ArityError, IndexOutOfRange, AlphabetMismatch, UsageError,
            UnsupportedLattice, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
