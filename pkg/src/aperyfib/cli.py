"""Command-line front end.

Exit codes: 0 success, 1 verification failure or uncertified series,
2 usage error (nothing is written to stdout in that case).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import bench, lucas, oracle, series
from .exactnum import qr_to_decimal, rat_to_sci
from .series import SpecError

FORMATS = ("text", "json", "csv")
SERIES_NAMES = [v.lower() for v in series.VARIANTS]
LEMMA_CHOICES = list(oracle.LEMMA_GROUPS)
GRID_KEYS = {"n", "m", "q", "p", "l", "bound"}


class UsageError(Exception):
    pass


def _series_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("series", type=str.lower, choices=SERIES_NAMES, metavar="SERIES",
                   help="one of: " + ", ".join(SERIES_NAMES))
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--p", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aperyfib", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="table of terms and partial sums")
    _series_args(p)
    p.add_argument("--terms", type=int, default=10)
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("certify", help="certify a series against its closed form")
    _series_args(p)
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("closed-form", help="exact closed form of a series")
    _series_args(p)
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("crosscheck", help="decimal cross-check of a certified sum")
    _series_args(p)
    p.add_argument("--digits", type=int, default=30)

    p = sub.add_parser("verify", help="check one identity over a parameter grid")
    p.add_argument("--lemma", required=True, choices=LEMMA_CHOICES)
    p.add_argument("--grid", default="", help="comma-separated bounds, e.g. q=50,m=25,bound=100000")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("fuzz", help="run the default identity grids")
    p.add_argument("--lemma", choices=LEMMA_CHOICES)
    p.add_argument("--bound", type=int, default=oracle.DEFAULT_GRID_BOUND)
    p.add_argument("--format", choices=FORMATS, default="text")

    for verb in ("fib", "lucas"):
        p = sub.add_parser(verb, help=f"exact {'Fibonacci' if verb == 'fib' else 'Lucas'} number")
        p.add_argument("n", type=int)

    p = sub.add_parser("bench", help="kernel and partial-sum timings")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("list", help="available series and their constraints")
    p.add_argument("--format", choices=FORMATS, default="text")
    return parser


def _parse_grid(raw: str) -> dict[str, int]:
    grid = {}
    for item in filter(None, (s.strip() for s in raw.split(","))):
        key, sep, value = item.partition("=")
        if not sep or key not in GRID_KEYS:
            raise UsageError(f"bad grid item {item!r}; use key=value with key in {sorted(GRID_KEYS)}")
        try:
            grid[key] = int(value)
        except ValueError:
            raise UsageError(f"grid value for {key} is not an integer: {value!r}") from None
    return grid


def parse_command(argv) -> argparse.Namespace:
    """Parse argv and validate series parameters; raises SystemExit(2) on misuse."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "series"):
            args.spec = series.spec_validate(args.series, m=args.m, a=args.a, p=args.p)
        if args.verb == "verify":
            args.grid = _parse_grid(args.grid)
        for name in ("terms", "digits", "repeat", "bound"):
            value = getattr(args, name, None)
            if value is not None and value < (0 if name == "terms" else 1):
                raise UsageError(f"--{name} must be {'>= 0' if name == 'terms' else '>= 1'}")
        if args.verb in ("fib", "lucas") and args.n < 0:
            raise UsageError("n must be nonnegative")
    except (SpecError, UsageError) as exc:
        parser.error(str(exc))
    return args


# ---------------------------------------------------------------- rendering


def _csv(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\r\n")
    w.writeheader()
    for r in rows:
        w.writerow({c: r.get(c, "") for c in columns})
    return buf.getvalue()


def _table(rows, columns) -> str:
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _series_rows(spec, N: int, digits: int):
    target = series.closed_form(spec)
    rows, partial = [], Fraction(0)
    for n in range(spec.n0, spec.n0 + N):
        t = series.direct_term(spec, n)
        partial += t
        rows.append({
            "n": n,
            "term": qr_to_decimal(t, digits),
            "partial": qr_to_decimal(partial, digits),
            "gap": qr_to_decimal(target - partial, digits),
        })
    return rows, target


def render_report(result: dict, fmt: str) -> str:
    """Render a series result (eval/certify) in text, CSV or JSON."""
    columns = ["n", "term", "partial", "gap"]
    if fmt == "csv":
        return _csv(result["rows"], columns)
    if fmt == "json":
        doc = {
            "spec": result["spec"],
            "n0": result["n0"],
            "rows": [{"n": r["n"], "term": r["term"], "partial": r["partial"]} for r in result["rows"]],
            "target": result["target"],
            "certified": result["certified"],
            "gap_bound": result["gap_bound"],
        }
        for extra in ("terms_used", "digits", "bound_kind", "decimal_digits_agreeing", "diagnostics"):
            if extra in result:
                doc[extra] = result[extra]
        return json.dumps(doc, indent=2) + "\n"
    out = [f"series {result['spec']}  (n0 = {result['n0']})", _table(result["rows"], columns)]
    out.append(f"target   {result['target']['exact']} = {result['target']['decimal']}")
    if result["certified"] is not None:
        out.append(f"gap bound {result['gap_bound']} ({result.get('bound_kind', '')})")
        out.append(f"terms used {result['terms_used']}")
        out.append("CERTIFIED" if result["certified"] else "NOT CERTIFIED")
        for d in result.get("diagnostics", []):
            out.append(f"  {d}")
    return "\n".join(out) + "\n"


def _target(spec, digits):
    target = series.closed_form(spec)
    return {"exact": str(target), "decimal": qr_to_decimal(target, digits)}


def cmd_eval(args, out) -> int:
    rows, _ = _series_rows(args.spec, args.terms, args.digits)
    result = {
        "spec": str(args.spec), "n0": args.spec.n0, "rows": rows,
        "target": _target(args.spec, args.digits), "certified": None, "gap_bound": None,
    }
    out.write(render_report(result, args.format))
    return 0


def cmd_certify(args, out) -> int:
    report = series.certify(args.spec, args.digits)
    rows, _ = _series_rows(args.spec, report.terms_used, args.digits)
    result = {
        "spec": str(args.spec), "n0": args.spec.n0, "rows": rows,
        "target": {"exact": str(report.target), "decimal": qr_to_decimal(report.target, args.digits)},
        "certified": report.certified,
        "gap_bound": rat_to_sci(report.gap_bound),
        "terms_used": report.terms_used,
        "digits": args.digits,
        "bound_kind": report.bound_kind,
        "decimal_digits_agreeing": report.decimal_digits_agreeing,
        "diagnostics": report.diagnostics,
    }
    out.write(render_report(result, args.format))
    return 0 if report.certified else 1


def cmd_closed_form(args, out) -> int:
    target = _target(args.spec, args.digits)
    if args.format == "json":
        out.write(json.dumps({"spec": str(args.spec), "target": target}, indent=2) + "\n")
    elif args.format == "csv":
        out.write(_csv([{"spec": str(args.spec), **target}], ["spec", "exact", "decimal"]))
    else:
        out.write(f"{args.spec}: {target['exact']} = {target['decimal']}\n")
    return 0


def cmd_crosscheck(args, out) -> int:
    ok = oracle.decimal_crosscheck(args.spec, args.digits)
    report = series.certify(args.spec, args.digits)
    out.write(f"partial {qr_to_decimal(report.partial, args.digits)}\n")
    out.write(f"target  {qr_to_decimal(report.target, args.digits)}\n")
    out.write("agree\n" if ok else "DISAGREE\n")
    return 0 if ok else 1


def _fuzz_output(reports, fmt, out) -> int:
    rows = []
    for r in reports:
        first = r.failures[0] if r.failures else None
        rows.append({
            "identity": r.identity, "grid": r.grid, "cases": r.cases,
            "failures": len(r.failures),
            "first_counterexample": "" if first is None else json.dumps(first[0], sort_keys=True),
        })
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    elif fmt == "csv":
        out.write(_csv(rows, list(rows[0]) if rows else ["identity"]))
    else:
        for r, row in zip(reports, rows):
            out.write(r.summary() + "\n")
            if r.failures:
                params, lhs, rhs = r.failures[0]
                out.write(f"  first counterexample {row['first_counterexample']}: lhs={lhs} rhs={rhs}\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_verify(args, out) -> int:
    grid = dict(args.grid)
    bound = grid.pop("bound", oracle.DEFAULT_GRID_BOUND)
    reports = [
        oracle.fuzz_identity(name, bound=bound, **grid) for name in oracle.LEMMA_GROUPS[args.lemma]
    ]
    return _fuzz_output(reports, args.format, out)


def cmd_fuzz(args, out) -> int:
    lemmas = None if args.lemma is None else [args.lemma]
    return _fuzz_output(oracle.fuzz_lemmas(lemmas, bound=args.bound), args.format, out)


def cmd_number(args, out) -> int:
    pair = lucas.fib_lucas(args.n)
    out.write(f"{pair.fib if args.verb == 'fib' else pair.lucas}\n")
    return 0


def cmd_bench(args, out) -> int:
    results = bench.run_all(repeat=args.repeat)
    if args.format == "json":
        out.write(json.dumps(results, indent=2) + "\n")
        return 0
    fib_cols = ["kernel", "n", "fast_doubling_s", "naive_s"]
    sum_cols = ["series", "N", "direct_s", "telescoped_s"]
    fmt = (lambda x: f"{x:.6f}" if isinstance(x, float) else x)
    fib_rows = [{k: fmt(v) for k, v in r.items()} for r in results["fib"]]
    sum_rows = [{k: fmt(v) for k, v in r.items()} for r in results["partial_sums"]]
    if args.format == "csv":
        out.write(_csv(fib_rows, fib_cols))
        out.write(_csv(sum_rows, sum_cols))
    else:
        out.write(f"active kernel: {results['active_kernel']}\n")
        out.write(_table(fib_rows, fib_cols))
        out.write(_table(sum_rows, sum_cols))
    return 0


def cmd_list(args, out) -> int:
    rows = [
        {"series": name, "n0": n0, "params": ",".join(params) or "-", "statement": text}
        for name, (params, n0, text) in series.VARIANTS.items()
    ]
    if args.format == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    elif args.format == "csv":
        out.write(_csv(rows, ["series", "n0", "params", "statement"]))
    else:
        for r in rows:
            out.write(f"{r['series']:<3} n0={r['n0']}  params={r['params']:<4} {r['statement']}\n")
    return 0


COMMANDS = {
    "eval": cmd_eval,
    "certify": cmd_certify,
    "closed-form": cmd_closed_form,
    "crosscheck": cmd_crosscheck,
    "verify": cmd_verify,
    "fuzz": cmd_fuzz,
    "fib": cmd_number,
    "lucas": cmd_number,
    "bench": cmd_bench,
    "list": cmd_list,
}


def main(argv=None, out=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    out = out or sys.stdout
    args = parse_command(argv)
    try:
        return COMMANDS[args.verb](args, out)
    except lucas.IndexBoundError as exc:
        print(f"aperyfib: {exc} (raise it with {lucas.ENV_INDEX_BOUND})", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
