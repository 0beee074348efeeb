"""Command-line interface: ``weylorder <command> [options]``.

Exit status: 0 on success, 1 when a verification or ``--check`` fails,
2 for usage errors, 3 for any other error (parse errors, cap exceeded, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import kernels
from .algebra import DEFAULT_CAP, brute_force_weyl, eval_on_number_state, normalize, balanced_to_npoly
from .bench import bench_kernels, bench_paths
from .difference import newton_expand, stirling_row
from .errors import WeylOrderError
from .identities import IDENTITIES, run_grid
from .orderings import SOrderCoeffs, s_transform, weyl_from_antinormal, weyl_from_normal, weyl_symmetric
from .parser import parse_npoly, parse_operator
from .poly import EPS
from .printing import STYLES, format, format_mpoly

EXIT_FAILED = 1
EXIT_ERROR = 3


def _cap(value: str) -> int:
    cap = int(value)
    if cap < 2:
        raise argparse.ArgumentTypeError("cap must be at least 2")
    return cap


def _count(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return n


def _scalar(value: str):
    try:
        return parse_npoly(value)
    except WeylOrderError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--style", choices=STYLES, default="text")
    common.add_argument("--cap", type=_cap, default=DEFAULT_CAP, help="brute-force letter cap")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")

    parser = argparse.ArgumentParser(prog="weylorder", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stirling", parents=[common], help="triangle of Stirling numbers of the first kind")
    p.add_argument("--n-max", type=_count, required=True)

    p = sub.add_parser("weyl", parents=[common], help="Weyl-ordered ad^n a^m in a chosen form")
    p.add_argument("--n", type=_count, required=True)
    p.add_argument("--m", type=_count, required=True)
    p.add_argument("--form", choices=("normal", "antinormal", "symmetric", "brute"), default="normal")
    p.add_argument("--eps", type=_scalar, default=None, help="value substituted for eps")
    p.add_argument("--check", action="store_true", help="cross-check every available form")

    p = sub.add_parser("order", parents=[common], help="convert between s-orderings")
    p.add_argument("--expr", required=True)
    p.add_argument("--from-s", type=_scalar, required=True)
    p.add_argument("--to-s", type=_scalar, required=True)
    p.add_argument("--eps", type=_scalar, default=None)

    p = sub.add_parser("verify", parents=[common], help="verify identities over a parameter grid")
    p.add_argument("--identity", required=True, choices=IDENTITIES + ("general_rel", "all"))
    p.add_argument("--n-max", type=_count, required=True)
    p.add_argument("--m-range", type=_count, default=6)
    p.add_argument("--j-max", type=_count, default=None)
    p.add_argument("--symbolic-eps", action="store_true",
                   help="keep eps symbolic in the derivative and delta identities")

    p = sub.add_parser("bench", parents=[common], help="closed form vs brute force, compiled vs Python kernel")
    p.add_argument("--n-max", type=_count, default=7)
    p.add_argument("--repeat", type=int, default=5)

    p = sub.add_parser("newton", parents=[common], help="Newton (falling factorial) expansion of a polynomial in N")
    p.add_argument("--expr", required=True)
    p.add_argument("--eps", type=_scalar, default=None)

    p = sub.add_parser("eval", parents=[common], help="evaluate a balanced operator on a number state")
    p.add_argument("--expr", required=True)
    p.add_argument("--k", type=_count, required=True)
    p.add_argument("--eps", type=_scalar, default=None)
    return parser


def _out(text: str) -> None:
    sys.stdout.write(text + "\n")


def cmd_stirling(args) -> int:
    for n in range(1, args.n_max + 1):
        row = stirling_row(n)
        if args.style == "json":
            _out(json.dumps({"n": n, "values": [str(v) for v in row]}))
        elif args.style == "latex":
            _out(" & ".join(str(v) for v in row) + r" \\")
        else:
            _out(" ".join(str(v) for v in row))
    return 0


def _subs(obj, eps):
    return obj if eps is None else obj.subs_eps(eps)


def cmd_weyl(args) -> int:
    n, m = args.n, args.m
    if args.form == "symmetric" and n != m:
        raise WeylOrderError(f"the symmetric form needs n == m (got n={n}, m={m})")
    if args.form == "symmetric" and n == 0:
        raise WeylOrderError("the symmetric form needs n >= 1")
    if args.form == "normal":
        result = _subs(weyl_from_normal(n, m), args.eps)
    elif args.form == "antinormal":
        result = _subs(weyl_from_antinormal(n, m), args.eps)
    elif args.form == "symmetric":
        result = weyl_symmetric(n)
    else:
        result = brute_force_weyl(n, m, cap=args.cap)
        if args.eps is not None:
            result = result.map_coefficients(lambda c: c.substitute("eps", args.eps))
    _out(format(result, args.style))
    if args.check:
        return _check_weyl(n, m, args.cap)
    return 0


def _check_weyl(n: int, m: int, cap: int) -> int:
    reference = weyl_from_normal(n, m)
    checks = {"antinormal": weyl_from_antinormal(n, m) == reference}
    if n + m <= cap:
        checks["brute"] = normalize(brute_force_weyl(n, m, cap=cap)) == reference
    if n == m and n >= 1:
        at_one = balanced_to_npoly(reference).substitute("eps", 1)
        checks["symmetric"] = weyl_symmetric(n).expand() == at_one
    for name, ok in checks.items():
        sys.stderr.write(f"check {name}: {'ok' if ok else 'MISMATCH'}\n")
    return 0 if all(checks.values()) else EXIT_FAILED


def cmd_order(args) -> int:
    expr = parse_operator(args.expr)
    src = SOrderCoeffs.from_operator_symbol(expr, args.from_s)
    result = s_transform(src, args.to_s)
    if args.eps is not None:
        result = result.subs_eps(args.eps)
    _out(format(result, args.style))
    return 0


def cmd_verify(args) -> int:
    if args.identity == "all":
        names = IDENTITIES
    elif args.identity == "general_rel":
        names = ("general_rel_neg_m", "general_rel_pos_m")
    else:
        names = (args.identity,)
    ok = True
    for name in names:
        for report in run_grid(name, args.n_max, args.m_range, args.j_max, jobs=args.jobs,
                               symbolic_eps=args.symbolic_eps):
            ok &= report.holds
            _out(report.json_line())
    return 0 if ok else EXIT_FAILED


def _fmt_time(t) -> str:
    return "-" if t is None else f"{t * 1e3:.3f}"


def cmd_bench(args) -> int:
    paths = bench_paths(args.n_max, cap=args.cap, repeat=args.repeat)
    kern = bench_kernels(min(args.n_max, args.cap // 2), repeat=args.repeat)
    if args.style == "json":
        for row in paths:
            _out(json.dumps({"bench": "paths", **row}))
        for row in kern:
            _out(json.dumps({"bench": "kernels", **row}))
    else:
        _out(f"closed form vs brute force (m = n, cap {args.cap})")
        _out(f"{'n':>3} {'words':>6} {'terms':>6} {'brute ms':>10} {'closed ms':>10}  equal")
        for r in paths:
            _out(f"{r['n']:>3} {r['words']:>6} {r['closed_terms']:>6} {_fmt_time(r['t_brute']):>10} "
                 f"{_fmt_time(r['t_closed']):>10}  {r['equal']}")
        _out("")
        _out(f"word kernel, active backend: {kernels.BACKEND}")
        _out(f"{'n':>3} {'words':>6} {'python ms':>10} {'cython ms':>10}  equal")
        for r in kern:
            _out(f"{r['n']:>3} {r['words']:>6} {_fmt_time(r['t_python']):>10} "
                 f"{_fmt_time(r['t_cython']):>10}  {r['equal']}")
    return 0 if all(r["equal"] for r in paths + kern) else EXIT_FAILED


def cmd_newton(args) -> int:
    p = parse_npoly(args.expr)
    step = EPS if args.eps is None else args.eps
    if args.eps is not None:
        p = p.substitute("eps", args.eps)
    expansion = newton_expand(p, step=step)
    if args.style == "json":
        _out(json.dumps({
            "increment": format_mpoly(expansion.increment),
            "coefficients": [c.to_json() for c in expansion.coefficients],
        }))
    else:
        for k, c in enumerate(expansion.coefficients):
            _out(f"{k}: {format(c, args.style)}")
    return 0


def cmd_eval(args) -> int:
    nf = normalize(parse_operator(args.expr))
    value = eval_on_number_state(nf, args.k)
    if args.eps is not None:
        value = value.substitute("eps", args.eps)
    _out(format(value, args.style))
    return 0


COMMANDS = {
    "stirling": cmd_stirling,
    "weyl": cmd_weyl,
    "order": cmd_order,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "newton": cmd_newton,
    "eval": cmd_eval,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (WeylOrderError, ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"weylorder {args.command}: error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
