"""
Command line front end.

Every subcommand builds a Report, prints it as text and, with ``--json PATH``,
writes it as JSON as well (a bare ``--json`` or ``--json -`` prints only the
JSON). Exit codes are 0 when everything passes, 1 on a failing check or a
falsified inequality and 2 for bad arguments.
"""

import argparse
import logging
import sys
import time

from chebkit import __version__, conf
from chebkit.certifier import CASES, certify
from chebkit.chebsearch import (
    least_prime_ap,
    least_prime_quadratic,
    survey,
    write_csv,
)
from chebkit.dataclasses import Report, Variant, WeightSpec
from chebkit.exceptions import (
    ChebkitError,
    DomainError,
    ScanLimitExceeded,
    TheoremViolation,
)
from chebkit.powersum import run_trials
from chebkit.renderers import JSONRenderer, TextRenderer
from chebkit.repulsion import low_lying_bound, optimize_alpha, verify_dh_table
from chebkit.weights import weight_checks, weight_mass

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

TABLE_VARIANTS = (
    Variant.ALL_ZEROS.value,
    Variant.REAL_ZEROS.value,
    Variant.NO_ARCH.value,
)
VARIANTS = tuple(variant.value for variant in Variant)


def dh_table(args):
    rows = verify_dh_table(args.variant, step=args.grid)
    return rows, all(row.passed for row in rows)


def optimize(args):
    optimum = optimize_alpha(args.t, args.variant, step=args.grid)
    return [optimum], optimum.passed


def bound(args):
    value = low_lying_bound(args.lam, args.a, args.ell, args.eta)
    result = {"lambda": args.lam, "A": args.a, "ell": args.ell, "eta": args.eta}
    return [{**result, "bound": value}], True


def weights(args):
    spec = WeightSpec(args.ell, args.a, args.b)
    if not args.check:
        return [spec, {"mass": weight_mass(spec)}], True
    checks = weight_checks(spec, seed=args.seed)
    return checks, all(check.passed for check in checks)


def powersum(args):
    summary = run_trials(
        args.trials, seed=args.seed, epsilon=args.epsilon, max_terms=args.max_terms
    )
    return [summary], summary["passed"]


def certify_case(args):
    certificates = certify(args.case)
    return certificates, all(certificate.overall for certificate in certificates)


def least_prime(args):
    if args.quadratic is not None:
        records = [
            least_prime_quadratic(args.quadratic, cls, cap=args.cap) for cls in (1, -1)
        ]
        results, passed = records, all(record.bound_pass for record in records)
    elif args.ap is not None:
        q, a = args.ap
        records = [least_prime_ap(q, a, cap=args.cap)]
        results, passed = records, records[0].bound_pass
    else:
        result = survey(args.survey, cap=args.cap)
        records = result.records
        results, passed = [result], result.overall_pass

    if args.csv:
        write_csv(records, args.csv)
    return results, passed


def _common(parser):
    parser.add_argument(
        "--json",
        metavar="PATH",
        nargs="?",
        const="-",
        help="also write the report as JSON, bare or - for stdout",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="debug logging on stderr"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chebkit",
        description="Recompute and certify the least prime ideal constants.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("dh-table", help="check the Deuring-Heilbronn tables")
    sub.add_argument("--variant", choices=TABLE_VARIANTS, default=TABLE_VARIANTS[0])
    sub.add_argument("--grid", type=float, default=conf.ALPHA_GRID_STEP)
    sub.set_defaults(handler=dh_table)

    sub = commands.add_parser("optimize", help="minimise K over alpha at one height")
    sub.add_argument("--t", type=float, required=True)
    sub.add_argument("--variant", choices=VARIANTS, default=VARIANTS[0])
    sub.add_argument("--grid", type=float, default=conf.ALPHA_GRID_STEP)
    sub.set_defaults(handler=optimize)

    sub = commands.add_parser("bound", help="the low-lying zero bound")
    sub.add_argument("--lambda", dest="lam", type=float, required=True)
    sub.add_argument("--a", type=float, required=True)
    sub.add_argument("--ell", type=int, required=True)
    sub.add_argument("--eta", type=float, default=0.0)
    sub.set_defaults(handler=bound)

    sub = commands.add_parser("weights", help="the weight f and its Laplace transform")
    sub.add_argument("--ell", type=int, required=True)
    sub.add_argument("--a", type=float, required=True)
    sub.add_argument("--b", type=float, required=True)
    sub.add_argument("--check", action="store_true")
    sub.add_argument("--seed", type=int, default=conf.DEFAULT_SEED)
    sub.set_defaults(handler=weights)

    sub = commands.add_parser("powersum", help="random power sum witnesses")
    sub.add_argument("--trials", type=int, default=10_000)
    sub.add_argument("--seed", type=int, default=conf.DEFAULT_SEED)
    sub.add_argument("--epsilon", type=float, default=1.0)
    sub.add_argument("--max-terms", type=int, default=50)
    sub.set_defaults(handler=powersum)

    sub = commands.add_parser("certify", help="certify the case analysis")
    sub.add_argument("--case", choices=CASES, default="all")
    sub.set_defaults(handler=certify_case)

    sub = commands.add_parser("least-prime", help="least primes in Artin classes")
    target = sub.add_mutually_exclusive_group(required=True)
    target.add_argument("--quadratic", type=int, metavar="D")
    target.add_argument("--ap", type=int, nargs=2, metavar=("Q", "A"))
    target.add_argument("--survey", type=int, metavar="MAXDISC")
    sub.add_argument("--csv", metavar="PATH")
    sub.add_argument("--cap", type=int, default=conf.SCAN_CAP)
    sub.set_defaults(handler=least_prime)

    for sub in commands.choices.values():
        _common(sub)
    return parser


def _params(args):
    skip = {"handler", "json", "verbose", "command"}
    return {key: value for key, value in sorted(vars(args).items()) if key not in skip}


def _emit(report, args):
    if args.json != "-":
        sys.stdout.write(TextRenderer().render(report))
    if args.json is None:
        return

    document = JSONRenderer().render(report)
    if args.json == "-":
        sys.stdout.write(document)
    else:
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(document)


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    started = time.perf_counter()
    try:
        results, passed = args.handler(args)
    except DomainError as exc:
        parser.print_usage(sys.stderr)
        print("chebkit: error: {}".format(exc), file=sys.stderr)
        return EXIT_USAGE
    except (TheoremViolation, ScanLimitExceeded) as exc:
        print("chebkit: FAIL: {}".format(exc), file=sys.stderr)
        return EXIT_FAIL
    except ChebkitError as exc:
        print("chebkit: error: {}".format(exc), file=sys.stderr)
        return EXIT_USAGE

    report = Report(
        tool_version=__version__,
        command=args.command,
        params=_params(args),
        results=list(results),
        overall_pass=bool(passed),
        wallclock_ms=(time.perf_counter() - started) * 1000,
    )
    _emit(report, args)
    return EXIT_PASS if report.overall_pass else EXIT_FAIL


def main():
    sys.exit(run())
