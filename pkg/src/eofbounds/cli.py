"""Command-line entry point: ``eofbounds {bounds,envelope,example,verify}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .densmat import BipartiteDensityMatrix, DimensionError, InvalidStateError
from .envelope import DEFAULT_GRID, build_envelopes
from .eof import eof_bounds
from .matrixio import MatrixFileError, parse_matrix, write_matrix
from .sweeps import BOUNDS_HEADER, bounds_row, envelope_rows, format_csv, parse_sweep, two_param_sweep, werner_sweep
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_INVALID = 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_bounds(args) -> int:
    try:
        mat, m, n = parse_matrix(Path(args.state).read_text())
    except (OSError, MatrixFileError) as exc:
        print(f"error: cannot parse {args.state}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        rho = BipartiteDensityMatrix(mat, m, n)
    except (InvalidStateError, DimensionError) as exc:
        print(f"error: invalid state: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if min(m, n) < 2:
        print("error: invalid state: min(dim_a, dim_b) must be >= 2", file=sys.stderr)
        return EXIT_INVALID
    table = build_envelopes(min(m, n), args.grid)
    report = eof_bounds(rho, table)
    print(report.summary())
    csv_text = format_csv(BOUNDS_HEADER, [bounds_row(0.0, report)])
    if args.csv:
        Path(args.csv).write_text(csv_text)
    else:
        print()
        sys.stdout.write(csv_text)
    return EXIT_OK


def cmd_envelope(args) -> int:
    if args.m < 2:
        print("error: --m must be >= 2", file=sys.stderr)
        return EXIT_PARSE
    header, rows = envelope_rows(build_envelopes(args.m, args.grid))
    _emit(format_csv(header, rows), args.out)
    return EXIT_OK


def cmd_example(args) -> int:
    try:
        name, values = parse_sweep(args.sweep)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.family == "werner":
        if name != "f":
            print("error: werner sweeps run over f", file=sys.stderr)
            return EXIT_PARSE
        header, rows = werner_sweep(args.d, values, build_envelopes(args.d, args.grid))
    else:
        if name == "a":
            fixed = args.x
        elif name == "x":
            fixed = args.a
        else:
            print("error: two-param sweeps run over a or x", file=sys.stderr)
            return EXIT_PARSE
        if fixed is None:
            print(f"error: sweeping {name} needs --{'x' if name == 'a' else 'a'}", file=sys.stderr)
            return EXIT_PARSE
        header, rows = two_param_sweep(name, values, fixed, build_envelopes(3, args.grid))
    _emit(format_csv(header, rows), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    res = run_suite(args.suite, args.n, args.seed)
    for c in res.checks:
        status = "PASS" if c.ok else ("KNOWN" if c.known and not args.strict else "FAIL")
        line = f"[{status}] {res.suite}: {c.name}"
        print(line + (f"  ({c.detail})" if c.detail else ""))
    ok = res.passed(strict=args.strict)
    if res.offender is not None:
        write_matrix(args.dump, res.offender)
        print(f"offending state written to {args.dump}")
    print(f"{res.suite}: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eofbounds", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="EoF bounds for a state file")
    b.add_argument("state", help="matrix file ('dims m n' + rows of re,im)")
    b.add_argument("--grid", type=int, default=DEFAULT_GRID)
    b.add_argument("--csv", help="write the CSV row here instead of stdout")
    b.set_defaults(func=cmd_bounds)

    e = sub.add_parser("envelope", help="tabulate X, Y, epsilon, eta")
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--grid", type=int, default=DEFAULT_GRID)
    e.add_argument("--out")
    e.set_defaults(func=cmd_envelope)

    x = sub.add_parser("example", help="bound sweeps over the example families")
    x.add_argument("family", choices=["werner", "two-param"])
    x.add_argument("--d", type=int, default=3, help="Werner local dimension")
    x.add_argument("--a", type=float, help="two-param: fixed a")
    x.add_argument("--x", type=float, help="two-param: fixed x")
    x.add_argument("--sweep", required=True, help="name=start:stop:step (inclusive)")
    x.add_argument("--grid", type=int, default=DEFAULT_GRID)
    x.add_argument("--out")
    x.set_defaults(func=cmd_example)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("--suite", required=True, choices=SUITES)
    v.add_argument("--n", type=int)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--dump", default="verify_offender.txt")
    v.add_argument("--strict", action="store_true", help="count known discrepancies as failures")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
