"""Command-line front end: ``landen eval | table | check | explore``.

Exit status is 0 on success, 1 when a verification suite fails and 2 on
usage or domain errors.
"""

import argparse
import csv
import math
import sys

from . import checks, grids
from .core import DomainError, landen
from .distortion import phi, phi_landen, phi_lm, phi_reference
from .elliptic import DEFAULT_PRODUCT_TERMS, agm, ellint_k_agm, ellint_k_landen_product
from .inverse import (
    INTERACTIVE_TERMS,
    ORACLE_TERMS,
    ApproximantId,
    error_table,
    mu_inverse,
    mu_inverse_landen,
    mu_inverse_theta,
)
from .modulus import mu, mu_landen_bracket

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

APPROXIMANTS = [a.value for a in ApproximantId]

# function -> (arity, {method: evaluator(args, depth)}, default method)
FUNCTIONS = {
    "landen": (2, {"iterate": lambda a, d: landen(a[0], _as_int(a[1], "p"))}, "iterate"),
    "K": (
        1,
        {
            "agm": lambda a, d: ellint_k_agm(a[0]),
            "landen_product": lambda a, d: ellint_k_landen_product(
                a[0], DEFAULT_PRODUCT_TERMS if d is None else d
            ),
        },
        "agm",
    ),
    "agm": (2, {"agm": lambda a, d: agm(a[0], a[1])}, "agm"),
    "mu": (1, {"agm": lambda a, d: mu(a[0])}, "agm"),
    "mu_inv": (
        1,
        {
            "production": lambda a, d: mu_inverse(a[0]),
            "theta": lambda a, d: mu_inverse_theta(a[0], INTERACTIVE_TERMS if d is None else d),
            **{
                name: (lambda n: lambda a, d: mu_inverse_landen(a[0], n, 5 if d is None else d))(name)
                for name in APPROXIMANTS
            },
        },
        "production",
    ),
    "phi": (
        2,
        {
            "production": lambda a, d: phi(a[0], a[1]),
            "lm": lambda a, d: phi_lm(a[0], a[1], 5 if d is None else d),
            "lphi": lambda a, d: phi_landen(a[0], a[1], 5 if d is None else d),
            "reference": lambda a, d: phi_reference(a[0], a[1]),
        },
        "production",
    ),
}


def _as_int(x, name):
    if x != int(x):
        raise DomainError(f"{name} must be an integer, got {x!r}", x)
    return int(x)


def fmt(x):
    """Shortest decimal that reads back as the same double (at most 17 digits)."""
    return repr(float(x))


def _csv_writer(stream):
    return csv.writer(stream, lineterminator="\n", quoting=csv.QUOTE_NONE)


def _range(text, what):
    try:
        return grids.parse_range(text)
    except ValueError as exc:
        raise _UsageError(f"--{what}: {exc}") from None


class _UsageError(Exception):
    pass


# --- eval -------------------------------------------------------------------


def cmd_eval(args, out, err):
    arity, methods, default = FUNCTIONS[args.function]
    if len(args.args) != arity:
        raise _UsageError(f"{args.function} takes {arity} argument(s), got {len(args.args)}")
    method = args.method or default
    if method not in methods:
        raise _UsageError(
            f"unknown method {method!r} for {args.function}; choose from {', '.join(methods)}"
        )
    try:
        values = [float(x) for x in args.args]
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    try:
        value = methods[method](values, args.depth)
    except DomainError as exc:
        print(f"domain error: {exc}", file=err)
        if exc.value is not None:
            print(f"offending value: {exc.value}", file=err)
        return EXIT_USAGE
    print(fmt(value), file=out)
    return EXIT_OK


# --- table ------------------------------------------------------------------


def _table_mu_inverse(args, out, err):
    ys = _range(args.ys, "ys")
    approx = ApproximantId.parse(args.approx)
    rows = error_table(ys, approx, args.p)
    w = _csv_writer(out)
    w.writerow(["y", "reference", "approx", "error"])
    worst = 0.0
    for row in rows:
        w.writerow([fmt(row.y), fmt(row.reference), fmt(row.approx), fmt(row.error)])
        if row.flag:
            print(f"y={fmt(row.y)}: {row.flag}", file=err)
        else:
            worst = max(worst, abs(row.error))
    print(f"{len(rows)} rows, {approx.value} at depth {args.p}, max |error| = {worst:.6g}", file=err)


def _table_phi(args, out, err):
    Ks = _range(args.K, "K")
    rs = _range(args.r, "r")
    w = _csv_writer(out)
    w.writerow(["K", "r", "reference", "approx", "error"])
    worst = 0.0
    count = 0
    for K in Ks:
        for r in rs:
            try:
                ref = mu_inverse_theta(mu(r) / K, ORACLE_TERMS)
                val = phi_lm(K, r, args.p)
            except DomainError as exc:
                nan = math.nan
                ref = val = nan
                print(f"K={fmt(K)}, r={fmt(r)}: {exc}", file=err)
            e = ref - val
            w.writerow([fmt(K), fmt(r), fmt(ref), fmt(val), fmt(e)])
            count += 1
            if not math.isnan(e):
                worst = max(worst, abs(e))
    print(f"{count} rows, LM at depth {args.p}, max |error| = {worst:.6g}", file=err)


def _table_bracket(args, out, err):
    rs = _range(args.r, "r")
    w = _csv_writer(out)
    w.writerow(["r", "lower", "mu", "upper"])
    inside = 0
    for r in rs:
        lower, upper = mu_landen_bracket(r, args.p)
        m = mu(r)
        inside += lower < m < upper
        w.writerow([fmt(r), fmt(lower), fmt(m), fmt(upper)])
    print(f"{len(rs)} rows, depth {args.p}, {inside} strictly bracketed", file=err)


TABLES = {
    "mu-inverse-error": _table_mu_inverse,
    "phi-error": _table_phi,
    "mu-bracket": _table_bracket,
}


def cmd_table(args, out, err):
    try:
        TABLES[args.kind](args, out, err)
    except DomainError as exc:
        print(f"domain error: {exc}", file=err)
        return EXIT_USAGE
    return EXIT_OK


# --- check ------------------------------------------------------------------


def _parse_tolerances(items):
    tolerances = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        try:
            if not sep:
                raise ValueError
            tolerances[name.strip()] = float(value)
        except ValueError:
            raise _UsageError(f"--tol expects name=value, got {item!r}") from None
    return tolerances


MAX_REPORTED_FAILURES = 5


def cmd_check(args, out, err):
    try:
        settings = checks.Settings(args.grid, _parse_tolerances(args.tol))
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    result = checks.run_suite(args.suite, settings)
    for inv in result.invariants:
        status = "ok  " if inv.passed else "FAIL"
        print(f"{status} {inv.name}: {inv.checks_run} checks, {len(inv.failures)} failed"
              f" -- {inv.description}", file=out)
        for f in inv.failures[:MAX_REPORTED_FAILURES]:
            print(f"     inputs={f.inputs} observed={f.observed} tolerance={f.tolerance}", file=out)
        if len(inv.failures) > MAX_REPORTED_FAILURES:
            print(f"     ... {len(inv.failures) - MAX_REPORTED_FAILURES} more", file=out)
    verdict = "passed" if result.passed else "FAILED"
    print(f"suite {result.suite_name} {verdict}: {result.checks_run} checks,"
          f" {len(result.failures)} failures", file=err)
    return EXIT_OK if result.passed else EXIT_FAILED


# --- explore ----------------------------------------------------------------


def _explore_open1(args, out, err):
    rs = _range(args.r, "r")
    Ks = _range(args.K, "K")
    try:
        ps = grids.parse_int_range(args.p)
    except ValueError as exc:
        raise _UsageError(f"--p: {exc}") from None
    points = violations = failures = 0
    worst = None
    for p in ps:
        for K in Ks:
            for r in rs:
                points += 1
                try:
                    value = phi_landen(K, r, p)
                except DomainError:
                    failures += 1
                    continue
                excess = value - 4.0 ** (1.0 - 1.0 / K) * r ** (1.0 / K)
                if excess > 0.0:
                    violations += 1
                    if worst is None or excess > worst[0]:
                        worst = (excess, K, r, p)
    print(f"points: {points}", file=out)
    print(f"violations: {violations}", file=out)
    print(f"domain failures: {failures}", file=out)
    if worst is not None:
        excess, K, r, p = worst
        print(f"largest violation: K={fmt(K)} r={fmt(r)} p={p} excess={fmt(excess)}", file=out)


def cmd_explore(args, out, err):
    if args.problem == "open2":
        print("not implemented: open problem 2", file=out)
        return EXIT_OK
    _explore_open1(args, out, err)
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="landen",
        description="Landen-sequence evaluation of K, mu, mu^-1 and phi_K, with verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one function at one point")
    ev.add_argument("function", choices=list(FUNCTIONS))
    ev.add_argument("args", nargs="+", help="numeric arguments (landen: r p, phi: K r, agm: a b)")
    ev.add_argument("--method", help="variant, e.g. agm, landen_product, theta, g3, lm, lphi, reference")
    ev.add_argument("--depth", type=int, help="Landen depth p, product terms or theta terms")
    ev.set_defaults(func=cmd_eval)

    tb = sub.add_parser("table", help="write an error or bracket table as CSV")
    tb.add_argument("kind", choices=list(TABLES))
    tb.add_argument("--ys", default="0.5:19.5:1", help="y range start:stop:step")
    tb.add_argument("--approx", default="g2", choices=APPROXIMANTS)
    tb.add_argument("--K", default="1.05:4:0.05", help="K range start:stop:step")
    tb.add_argument("--r", default="0.01:0.99:0.01", help="r range start:stop:step")
    tb.add_argument("--p", type=int, default=None, help="Landen depth")
    tb.set_defaults(func=cmd_table)

    ck = sub.add_parser("check", help="run a verification suite")
    ck.add_argument("suite", choices=list(checks.SUITE_NAMES))
    ck.add_argument("--grid", type=int, default=checks.DEFAULT_DENSITY,
                    help="interior grid points (default %(default)s)")
    ck.add_argument("--tol", action="append", metavar="NAME=VALUE",
                    help="override a tolerance, e.g. phi_pyth=1e-20 (repeatable)")
    ck.set_defaults(func=cmd_check)

    ex = sub.add_parser("explore", help="exploratory sweeps for open problems")
    ex.add_argument("problem", choices=["open1", "open2"])
    ex.add_argument("--r", default="0.01:0.7:0.01")
    ex.add_argument("--K", default="1.05:4.55:0.05")
    ex.add_argument("--p", default="0:6", help="depth range a:b")
    ex.set_defaults(func=cmd_explore)
    return parser


DEFAULT_TABLE_DEPTH = {"mu-inverse-error": 4, "phi-error": 5, "mu-bracket": 4}


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "kind", None) and args.p is None:
        args.p = DEFAULT_TABLE_DEPTH[args.kind]
    try:
        return args.func(args, out, err)
    except _UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
