"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails (a JSON witness is
printed), 2 for bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from .lattice import FLAVORS, Flavor, default_width, enumerate_states, partition_function
from .operators import atom_of_composition, grothendieck_det, lascoux
from .skyline import enumerate_skyline, skyline_shape, skyline_sum
from .symgroup import Permutation, as_partition, min_coset_rep
from .tableaux import (buch_grothendieck, enumerate_ssyt, enumerate_svt, generating_function,
                       key_class, key_filtered)
from .verify import SUITES, run_suite
from .yangbaxter import check_rll, parse_mutation


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _parse_lambda(text: str, n: int | None) -> tuple:
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
        return as_partition(parts, n if n is not None else len(parts))
    except ValueError as exc:
        raise UsageError(f"bad --lambda {text!r}: {exc}") from None


def _parse_perm(text: str | None, n: int) -> Permutation:
    if text is None:
        return Permutation.identity(n)
    try:
        w = Permutation.parse(text, n)
    except ValueError as exc:
        raise UsageError(f"bad permutation {text!r}: {exc}") from None
    if w.n != n:
        raise UsageError(f"permutation {text!r} has size {w.n}, expected {n}")
    return w


def _size(args, lam_text: str | None = None, w_text: str | None = None) -> int:
    if args.n is not None:
        return args.n
    if lam_text:
        return len([x for x in lam_text.split(",") if x.strip() != ""])
    if w_text and "," in w_text:
        return len(w_text.split(","))
    raise UsageError("cannot infer n; pass -n")


def _width(args, lam, n) -> int:
    m = args.m if args.m is not None else default_width(lam, n)
    if m < default_width(lam, n):
        raise UsageError(f"-m {m} is too small; need at least {default_width(lam, n)}")
    return m


def _emit_poly(args, poly, **meta):
    if args.format == "json":
        print(_dump(dict(meta, polynomial=str(poly))))
    else:
        print(poly)


# -- commands -------------------------------------------------------------

def cmd_groth(args) -> int:
    n = _size(args, args.lam)
    lam = _parse_lambda(args.lam, n)
    if args.method == "det":
        poly = grothendieck_det(lam, n)
    elif args.method == "ddo":
        poly = lascoux(Permutation.longest(n), lam)
    elif args.method == "lattice":
        poly = partition_function(Flavor.uncolored(), lam, n, _width(args, lam, n))
    else:
        poly = buch_grothendieck(lam, n)
    _emit_poly(args, poly, command="groth", method=args.method, n=n, **{"lambda": list(lam)})
    return 0


def cmd_lascoux(args) -> int:
    n = _size(args, args.lam, args.w)
    lam = _parse_lambda(args.lam, n)
    w = _parse_perm(args.w, n)
    if args.method == "ddo":
        poly = lascoux(w, lam)
    elif args.method == "lattice":
        poly = partition_function(Flavor.lascoux(w), lam, n, _width(args, lam, n))
    elif args.method == "lattice-prime":
        poly = partition_function(Flavor.lascoux_prime(w), lam, n, _width(args, lam, n))
    else:
        poly = generating_function(key_filtered(w, lam, n), n)
    _emit_poly(args, poly, command="lascoux", method=args.method, n=n, w=str(w),
               **{"lambda": list(lam)})
    return 0


def cmd_atom(args) -> int:
    n = _size(args, args.lam, args.w)
    lam = _parse_lambda(args.lam, n)
    w = _parse_perm(args.w, n)
    if args.method == "ddo":
        poly = atom_of_composition(w, lam)
    elif args.method == "lattice":
        flavor = Flavor.atom(min_coset_rep(w, lam))
        poly = partition_function(flavor, lam, n, _width(args, lam, n))
    elif args.method == "svt":
        poly = generating_function(key_class(w, lam, n), n)
    else:
        poly = skyline_sum(w, lam)
    _emit_poly(args, poly, command="atom", method=args.method, n=n, w=str(w),
               composition=list(w.act(lam)), **{"lambda": list(lam)})
    return 0


def cmd_states(args) -> int:
    n = _size(args, args.lam, args.w)
    lam = _parse_lambda(args.lam, n)
    if args.flavor == "uncolored":
        if args.w is not None:
            raise UsageError("the uncolored flavor takes no -w")
        flavor = Flavor.uncolored()
    else:
        flavor = Flavor(args.flavor, _parse_perm(args.w, n))
    m = _width(args, lam, n)
    states = enumerate_states(flavor, lam, n, m)
    if args.format == "json":
        print(_dump([s.to_json() for s in states]))
    else:
        for k, s in enumerate(states):
            print(f"# state {k}  weight {s.weight()}")
            print(s.to_ascii())
        print(f"# {len(states)} states; Z = {partition_function(flavor, lam, n, m)}")
    return 0


def cmd_tableaux(args) -> int:
    n = _size(args, args.lam, args.w)
    lam = _parse_lambda(args.lam, n)
    if args.kind == "svt":
        tabs = enumerate_svt(lam, n)
    elif args.kind == "ssyt":
        tabs = enumerate_ssyt(lam, n)
    else:
        tabs = key_class(_parse_perm(args.w, n), lam, n)
    if args.format == "json":
        print(_dump({"tableaux": [t.to_json() for t in tabs],
                     "generating_function": str(generating_function(tabs, n))}))
    else:
        for t in tabs:
            print(t)
            print()
        print(f"# {len(tabs)} tableaux; sum = {generating_function(tabs, n)}")
    return 0


def cmd_skyline(args) -> int:
    n = _size(args, args.lam, args.w)
    lam = _parse_lambda(args.lam, n)
    w = _parse_perm(args.w, n)
    shape = skyline_shape(w, lam)
    tabs = enumerate_skyline(shape, n)
    total = skyline_sum(w, lam)
    if args.format == "json":
        print(_dump({"shape": list(shape), "tableaux": [t.to_json() for t in tabs],
                     "sum": str(total)}))
    else:
        for t in tabs:
            print(t)
            print()
        print(f"# {len(tabs)} skyline tableaux of shape {list(shape)}; sum = {total}")
    return 0


def cmd_ybe(args) -> int:
    try:
        mutations = dict(parse_mutation(m) for m in args.mutate)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = check_rll(args.flavor, mutations)
    if report.passed:
        if args.format == "json":
            print(_dump(report.to_json()))
        else:
            print(f"RLL holds for {args.flavor}: {report.boundaries} boundaries checked")
        return 0
    print(_dump(report.to_json()))
    return 1


def cmd_verify(args) -> int:
    n = args.n if args.n is not None else 3
    result = run_suite(args.suite, n=n, max_cells=args.max_cells, seed=args.seed)
    if result.passed:
        if args.format == "json":
            print(_dump(result.to_json()))
        else:
            print(f"suite {result.name}: PASS ({result.checks} checks)")
        return 0
    print(_dump(result.to_json()))
    return 1


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def flags(suppress: bool) -> argparse.ArgumentParser:
        # subcommands repeat the global flags; SUPPRESS keeps them from
        # overwriting values given before the subcommand
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("-n", type=int, default=d(None), help="number of variables / rows")
        p.add_argument("-m", type=int, default=d(None), help="number of lattice columns")
        p.add_argument("--format", choices=("text", "json", "ascii"), default=d("text"))
        p.add_argument("--seed", type=int, default=d(0), help="seed for randomized checks")
        return p

    common = flags(True)
    parser = argparse.ArgumentParser(prog="fivevertex", parents=[flags(False)],
                                     description="Lascoux polynomials and atoms from five-vertex models")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("groth", cmd_groth, "symmetric Grothendieck polynomial")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--method", choices=("det", "ddo", "lattice", "svt"), default="det")

    p = add("lascoux", cmd_lascoux, "Lascoux polynomial L_{w lambda}")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("-w", default=None)
    p.add_argument("--method", choices=("ddo", "lattice", "lattice-prime", "svt"), default="ddo")

    p = add("atom", cmd_atom, "Lascoux atom of the composition w.lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("-w", default=None)
    p.add_argument("--method", choices=("ddo", "lattice", "svt", "skyline"), default="ddo")

    p = add("states", cmd_states, "enumerate lattice states")
    p.add_argument("--flavor", choices=FLAVORS, default="uncolored")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("-w", default=None)

    p = add("tableaux", cmd_tableaux, "tableau enumeration")
    tsub = p.add_subparsers(dest="action", required=True)
    e = tsub.add_parser("enumerate", parents=[common])
    e.set_defaults(func=cmd_tableaux)
    e.add_argument("--lambda", dest="lam", required=True)
    e.add_argument("--kind", choices=("svt", "ssyt", "key-class"), default="svt")
    e.add_argument("-w", "--w", dest="w", default=None)

    p = add("skyline", cmd_skyline, "set-valued skyline tableaux of shape w.lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("-w", default=None)

    p = add("ybe", cmd_ybe, "check the RLL relation")
    p.add_argument("--flavor", choices=FLAVORS, required=True)
    p.add_argument("--mutate", action="append", default=[],
                   help="override a weight, e.g. a2=1 or 'R:X3=zj-zi'")

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-cells", type=int, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
