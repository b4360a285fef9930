"""Command line front end: ``wreathstats {stats,poly,table,verify}``.

Exit codes: 0 success (identity holds), 1 identity fails, 2 usage or parse
error, 3 enumeration guard exceeded.  Results go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import BiPoly
from .distributions import IDENTITIES, MahonianSpec, eulerian, majA_enumerate, majA_recurrence, verify_identity
from .perm import DEFAULT_GUARD, EnumerationGuardError, LOrder, descent_data, parse_window, tilde_descent_data

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _color_list(text: str) -> frozenset:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated color list, got {text!r}")


def _resolve_L(args) -> tuple[int, frozenset | None]:
    """(ell, explicit L or None) from --ell / --L."""
    if args.L is not None and args.ell is not None:
        raise UsageError("give either --L or --ell, not both")
    if args.L is not None:
        LOrder(args.a, args.L)
        return len(args.L), args.L
    return (args.ell if args.ell is not None else 0), None


def _guard(args):
    return None if args.no_guard else args.guard


def _render_poly(p: BiPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(p.to_json_obj())
    if fmt == "latex":
        return p.to_latex()
    return str(p)


# -- subcommands -------------------------------------------------------------

def cmd_stats(args) -> int:
    sigma = parse_window(args.perm, args.a)
    order = LOrder(args.a, args.L or frozenset())
    d = descent_data(sigma, order)
    out = {"des": d.des, "set": sorted(d.descent_set), "rmaj": d.rmaj}
    if args.tilde:
        td = tilde_descent_data(sigma, order)
        out.update({"tilde_des": td.des, "tilde_set": sorted(td.descent_set), "tilde_maj": td.rmaj})
    if args.format == "json":
        print(json.dumps(out))
    else:
        print(f"Des_L = {{{', '.join(map(str, out['set']))}}}")
        print(f"des_L = {d.des}")
        print(f"rmaj_L = {d.rmaj}")
        if args.tilde:
            print(f"Des~_L = {{{', '.join(map(str, out['tilde_set']))}}}")
            print(f"des~_L = {out['tilde_des']}")
            print(f"maj~_L = {out['tilde_maj']}")
    return EXIT_OK


def _build(args, a, ell, L, n) -> BiPoly:
    method = args.method
    if args.q1:
        return eulerian(a, ell, n, method, L=L, guard=_guard(args), jobs=args.jobs)
    if method == "enumerate":
        colors = L if L is not None else frozenset(range(ell))
        return majA_enumerate(a, colors, n, guard=_guard(args), jobs=args.jobs)
    if method == "recurrence":
        if L is not None:
            MahonianSpec(a, ell, n, L)
        return majA_recurrence(a, ell, n)
    raise UsageError(f"method {method!r} only applies with --q1")


def cmd_poly(args) -> int:
    ell, L = _resolve_L(args)
    print(_render_poly(_build(args, args.a, ell, L, args.n), args.format))
    return EXIT_OK


def cmd_table(args) -> int:
    ell, L = _resolve_L(args)
    rows = []
    for n in range(args.N + 1):
        p = _build(args, args.a, ell, L, n)
        for s in range(max(p.deg_t(), 0) + 1):
            rows.append((n, s, p.t_coefficient(s)))
    if args.format == "json":
        print(json.dumps([{"n": n, "s": s, "poly": c.to_json_obj()} for n, s, c in rows]))
    elif args.format == "latex":
        print(r"\begin{tabular}{rrl}")
        print(r"$n$ & $s$ & coefficient \\ \hline")
        for n, s, c in rows:
            print(f"{n} & {s} & ${c.to_latex()}$ \\\\")
        print(r"\end{tabular}")
    else:
        print("n\ts\tcoefficient")
        for n, s, c in rows:
            print(f"{n}\t{s}\t{c}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ell, L = _resolve_L(args)
    spec = MahonianSpec(args.a, ell, args.n, L)
    report = verify_identity(args.identity, spec, args.S, args.N,
                             source=args.source, guard=_guard(args))
    if args.format == "text":
        status = "holds" if report.holds else "FAILS"
        print(f"{report.identity} {status} {json.dumps(report.params)}")
        if not report.holds:
            print(json.dumps(report.witness))
    else:
        print(report.to_json())
    return EXIT_OK if report.holds else EXIT_FAIL


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathstats",
        description="L-descent statistics and Euler-Mahonian polynomials on C_a wr S_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices=("text", "json", "latex")):
        p.add_argument("--a", type=int, default=1, help="color modulus (default 1)")
        p.add_argument("--format", choices=fmt_choices, default="text")

    def colors(p):
        p.add_argument("--L", type=_color_list, default=None, help="comma separated colors, e.g. 0,2")
        p.add_argument("--ell", type=int, default=None, help="|L|; uses L = {0..ell-1}")

    def guards(p):
        p.add_argument("--guard", type=int, default=DEFAULT_GUARD,
                       help="refuse to enumerate groups larger than this")
        p.add_argument("--no-guard", action="store_true")

    p = sub.add_parser("stats", help="Des_L, des_L and rmaj_{L,n} of one permutation")
    common(p, ("text", "json"))
    p.add_argument("--L", type=_color_list, default=frozenset())
    p.add_argument("--perm", required=True, help='window, e.g. "3^2 1^0 2^1"')
    p.add_argument("--tilde", action="store_true", help="also print the tilde statistics")
    p.set_defaults(func=cmd_stats)

    for name, func, helptext in (("poly", cmd_poly, "one Euler-Mahonian or Eulerian polynomial"),
                                 ("table", cmd_table, "t-coefficients for n = 0..N")):
        p = sub.add_parser(name, help=helptext)
        common(p)
        colors(p)
        if name == "poly":
            p.add_argument("--n", type=int, required=True)
        else:
            p.add_argument("--N", type=int, required=True)
        p.add_argument("--method", default="recurrence",
                       choices=("enumerate", "recurrence", "derivative", "specialize"))
        p.add_argument("--q1", action="store_true", help="set q = 1 (Eulerian polynomial)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
        guards(p)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check one identity exactly")
    common(p, ("json", "text"))
    colors(p)
    p.add_argument("--identity", required=True, choices=sorted(IDENTITIES))
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--S", type=int, default=None, help="t-truncation for quotient checks (default n+3)")
    p.add_argument("--N", type=int, default=None, help="u-order for series checks (default n)")
    p.add_argument("--source", choices=("recurrence", "enumerate"), default="recurrence")
    guards(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except EnumerationGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
