"""Command line front end.

Subcommands: genfun (generating function of a shape or configuration),
steady (stationary distribution by exact solver, matrix product, or
simulation), verify (the named cross-checks), eulerian (closed form vs
aggregated level sums), simulate (empirical vs exact frequencies), hasse
(cover relation of the diagram order as an edge list).

Exit codes: 0 success, 1 a verification or cross-check failed, 2 usage
error.  Output is deterministic; states always appear in binary order.
Formats: text (default; hasse defaults to csv), json, csv.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from itertools import combinations

from . import ansatz, chain, tableaux, verify
from .perms import q_eulerian
from .shapes import (
    config_str,
    configurations,
    hasse_cover,
    lambda_of_tau,
    parse_config,
    parse_diagram,
    phi,
)


class UsageError(ValueError):
    pass


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="paseptab",
        description="Exact stationary distributions of the open exclusion "
        "process, with tableau, path, and matrix cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default="text"):
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default=default, help="output format")

    p = sub.add_parser("genfun", help="generating function of a shape")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--tau", help="configuration, e.g. 010")
    group.add_argument("--shape", help="diagram rows, e.g. 2,1")
    p.add_argument("--cross-check", action="store_true",
                   help="recompute by brute-force enumeration and compare")
    p.add_argument("--trunc-dim", type=int, default=None,
                   help="override the matrix truncation (must be >= n+2)")
    add_format(p)

    p = sub.add_parser("steady", help="stationary distribution")
    p.add_argument("-n", type=int, required=True, help="number of sites")
    p.add_argument("--q", type=_fraction, default=Fraction(1))
    p.add_argument("--alpha", type=_fraction, default=Fraction(1))
    p.add_argument("--beta", type=_fraction, default=Fraction(1))
    p.add_argument("--method", choices=("solve", "ansatz", "simulate"),
                   default="solve")
    p.add_argument("--steps", type=int, default=100000)
    p.add_argument("--burn-in", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trunc-dim", type=int, default=None)
    add_format(p)

    p = sub.add_parser("verify", help="run the named cross-checks")
    p.add_argument("--all", action="store_true", help="run every check")
    p.add_argument("--check", action="append", default=[],
                   metavar="NAME", help=f"one of: {', '.join(verify.CHECKS)}")
    p.add_argument("--max-n", type=int, default=4,
                   help="sweep n = 1..max-n (each check clamps to its cap)")
    add_format(p)

    p = sub.add_parser("eulerian",
                       help="q-Eulerian closed form vs aggregated weights")
    p.add_argument("-n", type=int, required=True)
    add_format(p)

    p = sub.add_parser("simulate", help="Monte Carlo vs exact distribution")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--q", type=_fraction, default=Fraction(1))
    p.add_argument("--alpha", type=_fraction, default=Fraction(1))
    p.add_argument("--beta", type=_fraction, default=Fraction(1))
    p.add_argument("--steps", type=int, default=100000)
    p.add_argument("--burn-in", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    add_format(p)

    p = sub.add_parser("hasse", help="cover relation of the diagram order")
    p.add_argument("-n", type=int, required=True, help="number of sites")
    p.add_argument("-k", type=int, required=True, help="number of particles")
    add_format(p, default="csv")

    return parser


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_genfun(args):
    if args.tau is not None:
        tau = parse_config(args.tau)
        shape = lambda_of_tau(tau)
    else:
        shape = parse_diagram(args.shape)
        tau = phi(shape)
    from_ansatz = ansatz.ansatz_eval(ansatz.AnsatzKind.TABLEAU, tau,
                                     dim=args.trunc_dim)
    result = from_ansatz.serialize()
    cross = None
    if args.cross_check:
        from_enum = tableaux.genfun_shape(shape)
        cross = {
            "enumeration": from_enum.serialize(),
            "ansatz": result,
            "match": from_enum == from_ansatz,
        }
    if args.format == "json":
        print(json.dumps({"tau": config_str(tau), "shape": str(shape),
                          "genfun": result, "cross_check": cross}, indent=2))
    elif args.format == "csv":
        print(_csv_text(["tau", "shape", "genfun"],
                        [[config_str(tau), str(shape), result]]), end="")
    else:
        print(result)
    if cross is not None and not cross["match"]:
        print("cross-check failed: enumeration disagrees with the matrix "
              f"product: {cross['enumeration']} vs {cross['ansatz']}",
              file=sys.stderr)
        return 1
    return 0


def _params(args):
    return chain.ChainParams(args.n, args.q, args.alpha, args.beta)


def _cmd_steady(args):
    params = _params(args)
    if args.method == "solve":
        dist = chain.steady_state_exact(params)
        rational = True
    elif args.method == "ansatz":
        weights = {
            tau: ansatz.ansatz_eval(ansatz.AnsatzKind.TABLEAU, tau,
                                    dim=args.trunc_dim)
            .evaluate(params.q, params.alpha, params.beta)
            for tau in configurations(params.n)
        }
        z = sum(weights.values(), Fraction(0))
        dist = {tau: w / z for tau, w in weights.items()}
        rational = True
    else:
        dist = chain.simulate(params, args.steps, args.burn_in, args.seed)
        rational = False
    if args.format == "json":
        states = [
            {"state": config_str(tau), "prob": str(p) if rational else p}
            for tau, p in dist.items()
        ]
        print(json.dumps({
            "n": params.n, "q": str(params.q), "alpha": str(params.alpha),
            "beta": str(params.beta), "method": args.method, "states": states,
        }, indent=2))
    elif args.format == "csv":
        print(chain.distribution_to_csv(dist, rational=rational), end="")
    else:
        for tau, p in dist.items():
            print(f"{config_str(tau)}\t{p if rational else repr(p)}")
    return 0


def _cmd_verify(args):
    names = list(verify.CHECKS) if args.all or not args.check else args.check
    try:
        results = verify.run_checks(names, args.max_n)
    except KeyError as exc:
        raise UsageError(
            f"unknown check {exc.args[0]!r}; choose from: "
            + ", ".join(verify.CHECKS)
        ) from None
    passed = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps({
            "max_n": args.max_n,
            "checks": [
                {"name": r.name, "scope": r.scope, "passed": r.passed,
                 "counterexample": r.counterexample, "details": r.details}
                for r in results
            ],
            "passed": passed,
        }, indent=2))
    elif args.format == "csv":
        print(_csv_text(
            ["name", "scope", "passed", "counterexample", "details"],
            [[r.name, r.scope, r.passed, r.counterexample or "",
              r.details or ""] for r in results]), end="")
    else:
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'} {r.name} [{r.scope}]"
            if r.counterexample:
                line += f" counterexample: {r.counterexample}"
            if r.details:
                line += f" ({r.details})"
            print(line)
        print(f"{'all checks passed' if passed else 'CHECKS FAILED'}")
    return 0 if passed else 1


def _cmd_eulerian(args):
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    if args.n + 1 > 9:
        raise UsageError("n too large for the brute-force aggregate (max 8)")
    sums = {}
    for tau in configurations(args.n):
        k = sum(tau)
        f = ansatz.ansatz_eval(ansatz.AnsatzKind.TABLEAU, tau).subs_ab_one()
        sums[k] = sums[k] + f if k in sums else f
    rows = []
    for k in range(args.n + 1):
        rows.append((k, q_eulerian(k + 1, args.n + 1).serialize(),
                     sums[k].serialize()))
    if args.format == "json":
        print(json.dumps({
            "n": args.n,
            "rows": [{"k": k, "q_eulerian": e, "aggregate": agg}
                     for k, e, agg in rows],
        }, indent=2))
    elif args.format == "csv":
        print(_csv_text(["k", "q_eulerian", "aggregate"], rows), end="")
    else:
        for k, e, agg in rows:
            print(f"{k}\t{e}\t{agg}")
    return 0 if all(e == agg for _, e, agg in rows) else 1


def _cmd_simulate(args):
    params = _params(args)
    empirical = chain.simulate(params, args.steps, args.burn_in, args.seed)
    exact = None
    tv = None
    if params.n <= 10:
        exact = chain.steady_state_exact(params)
        tv = chain.total_variation(
            empirical, {tau: float(p) for tau, p in exact.items()}
        )
    if args.format == "json":
        states = [
            {"state": config_str(tau), "freq": p,
             "exact": str(exact[tau]) if exact else None}
            for tau, p in empirical.items()
        ]
        print(json.dumps({
            "n": params.n, "q": str(params.q), "alpha": str(params.alpha),
            "beta": str(params.beta), "steps": args.steps,
            "burn_in": args.burn_in, "seed": args.seed,
            "states": states, "total_variation": tv,
        }, indent=2))
    elif args.format == "csv":
        rows = [
            [config_str(tau), repr(p), str(exact[tau]) if exact else ""]
            for tau, p in empirical.items()
        ]
        print(_csv_text(["state", "freq", "exact"], rows), end="")
    else:
        for tau, p in empirical.items():
            line = f"{config_str(tau)}\t{p!r}"
            if exact:
                line += f"\t{exact[tau]}"
            print(line)
        if tv is not None:
            print(f"total_variation\t{tv!r}")
    return 0


def _cmd_hasse(args):
    if args.n < 1:
        raise UsageError("n must be at least 1")
    if not 0 <= args.k <= args.n:
        raise UsageError(f"k must lie in 0..{args.n}")
    level = [tau for tau in configurations(args.n) if sum(tau) == args.k]
    edges = []
    for t1, t2 in combinations(level, 2):
        if hasse_cover(t1, t2):
            edges.append((config_str(t1), config_str(t2)))
        elif hasse_cover(t2, t1):
            edges.append((config_str(t2), config_str(t1)))
    if args.format == "json":
        print(json.dumps({"n": args.n, "k": args.k,
                          "edges": [list(e) for e in edges]}, indent=2))
    elif args.format == "csv":
        print(_csv_text(["lower", "upper"], edges), end="")
    else:
        for lo, hi in edges:
            print(f"{lo} -> {hi}")
    return 0


_COMMANDS = {
    "genfun": _cmd_genfun,
    "steady": _cmd_steady,
    "verify": _cmd_verify,
    "eulerian": _cmd_eulerian,
    "simulate": _cmd_simulate,
    "hasse": _cmd_hasse,
}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
