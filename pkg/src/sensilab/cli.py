"""Command-line front end.

Subcommands: sens (evaluate one input), table (minS/maxS per n), scan
(conjecture scanner), verify (structural checkers), avg (exact average
sensitivity).  Exit codes: 0 success, 1 verification failure, 2 usage
error, 3 resource refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import __version__
from .core import BitVector, sensitive_coordinates
from .engine import (
    SearchConfig,
    TARGET_MIN,
    hard_limit_from_env,
    iter_conjecture_scan,
    min_sensitivity_with_early_exit,
    parallel_scan,
)
from .errors import ContractViolationError, ExhaustiveLimitError
from .verify import (
    table1_expected,
    verify_all_ones,
    verify_max_sensitivity,
    verify_p_squared,
    verify_prime_min_sensitivity,
    verify_table1,
)
from .wsf import OriginalWSF, SimplifiedWSF, fast_sensitive_coordinates, weight_sum

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3

TABLE_COLUMNS = ["n", "minS", "maxS", "min_witness_bits", "min_witness_hex",
                 "elapsed_ms"]
SCAN_COLUMNS = ["n", "predicted", "justification", "measured_minS", "agrees"]
AVG_COLUMNS = ["n", "as_numerator", "as_denominator", "as_reduced",
               "as_decimal", "minS", "maxS"]


def _manifest(argv: List[str], engine: str, hard_limit: int, workers: int,
              duration: Optional[float]) -> dict:
    return {
        "command": " ".join(argv),
        "version": __version__,
        "engine": engine,
        "hard_limit": hard_limit,
        "duration_s": None if duration is None else round(duration, 6),
        "workers": workers,
    }


def _emit_json(manifest: dict, records: List[dict], out) -> None:
    out.write(json.dumps({"manifest": manifest, "records": records}, indent=2))
    out.write("\n")


def _emit_csv(columns: List[str], rows: List[dict], out) -> None:
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(_csv_field(row.get(c)) for c in columns) + "\n")


def _csv_field(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


# ---------------------------------------------------------------- sens


def cmd_sens(args, argv) -> int:
    bits = args.input
    x = BitVector.from_string(bits)
    if x.n != args.n:
        raise ContractViolationError(
            f"bitstring length {x.n} does not match --n {args.n}"
        )
    if args.family == "simplified":
        f = SimplifiedWSF(args.n)
        s = weight_sum(f, x)
        sensitive = fast_sensitive_coordinates(f, x)
    else:
        f = OriginalWSF(args.n)
        s = f.weight_sum(x)
        sensitive = sensitive_coordinates(f, x)
    fx = f.eval(x)
    sen = len(sensitive)
    record = {
        "n": args.n,
        "family": args.family,
        "input_bits": x.to_string(),
        "input_hex": x.to_hex(),
        "s": s,
        "f": fx,
        "sen": sen,
        "sensitive": sensitive,
    }
    if args.format == "json":
        _emit_json(
            _manifest(argv, "naive", args.hard_limit, 1, None), [record], sys.stdout
        )
    elif args.format == "csv":
        row = dict(record, sensitive=";".join(str(i) for i in sensitive))
        _emit_csv(
            ["n", "family", "input_bits", "input_hex", "s", "f", "sen", "sensitive"],
            [row],
            sys.stdout,
        )
    else:
        print(f"n = {args.n}  family = {args.family}  X = {x.to_string()} ({x.to_hex()})")
        print(f"s(X) = {s}")
        print(f"f(X) = {fx}")
        print(f"Sen(f, X) = {sen}")
        print(f"sensitive = {sensitive}")
    return EXIT_OK


# ---------------------------------------------------------------- table


def cmd_table(args, argv) -> int:
    if args.max_n > args.hard_limit and not args.force:
        raise ExhaustiveLimitError(
            f"--max-n {args.max_n} exceeds the exhaustive hard limit "
            f"{args.hard_limit}; pass --force to override"
        )
    start = time.perf_counter()
    rows = []
    mismatches = []
    for n in range(1, args.max_n + 1):
        cfg = SearchConfig(
            n=n, worker_count=args.workers,
            hard_limit=args.hard_limit, force=args.force,
        )
        report = parallel_scan(SimplifiedWSF(n), cfg)
        rows.append({
            "n": n,
            "minS": report.min_sen,
            "maxS": report.max_sen,
            "min_witness_bits": report.min_witness.to_string(),
            "min_witness_hex": report.min_witness.to_hex(),
            "elapsed_ms": round(report.elapsed * 1000, 3) if args.timings else None,
        })
        if args.check and n <= 26 and report.min_sen != table1_expected(n):
            mismatches.append(n)
    duration = time.perf_counter() - start
    engine = "gray-parallel" if args.workers > 1 else "gray"
    if args.format == "json":
        _emit_json(
            _manifest(argv, engine, args.hard_limit, args.workers, duration),
            rows, sys.stdout,
        )
    elif args.format == "csv":
        _emit_csv(TABLE_COLUMNS, rows, sys.stdout)
    else:
        print(f"{'n':>3} {'minS':>4} {'maxS':>4}  min_witness")
        for row in rows:
            print(
                f"{row['n']:>3} {row['minS']:>4} {row['maxS']:>4}  "
                f"{row['min_witness_bits']} ({row['min_witness_hex']})"
            )
    if mismatches:
        print(
            f"table check FAILED at n = {mismatches}", file=sys.stderr
        )
        return EXIT_VERIFY_FAIL
    return EXIT_OK


# ---------------------------------------------------------------- scan


def cmd_scan(args, argv) -> int:
    if args.n_from < 1 or args.n_to < args.n_from:
        raise ContractViolationError(
            f"bad range [{args.n_from}, {args.n_to}]"
        )
    cfg = SearchConfig(
        n=args.n_from, target=TARGET_MIN, worker_count=args.workers,
        early_exit_threshold=0, hard_limit=args.hard_limit, force=args.force,
    )
    records = iter_conjecture_scan(args.n_from, args.n_to, cfg)
    out = sys.stdout
    engine = "gray-parallel" if args.workers > 1 else "gray"
    disagreements = 0
    if args.format == "json":
        # Streamed: the manifest is written before the scan runs, so its
        # duration is null; per-record timings carry the cost breakdown.
        manifest = _manifest(argv, engine, args.hard_limit, args.workers, None)
        out.write('{\n"manifest": ' + json.dumps(manifest) + ',\n"records": [\n')
        first = True
        for rec in records:
            if not first:
                out.write(",\n")
            first = False
            out.write(json.dumps({
                "n": rec.n,
                "predicted": rec.prediction.predicted,
                "justification": rec.prediction.justification,
                "measured_minS": rec.measured_min_sen,
                "agrees": rec.agrees,
                "elapsed_ms": round(rec.elapsed * 1000, 3),
            }))
            out.flush()
            if rec.agrees is False:
                disagreements += 1
        out.write("\n]}\n")
    elif args.format == "csv":
        out.write(",".join(SCAN_COLUMNS) + "\n")
        for rec in records:
            row = [
                str(rec.n),
                rec.prediction.predicted,
                rec.prediction.justification,
                _csv_field(rec.measured_min_sen),
                _csv_field(rec.agrees),
            ]
            out.write(",".join(row) + "\n")
            out.flush()
            if rec.agrees is False:
                disagreements += 1
    else:
        for rec in records:
            agree = "-" if rec.agrees is None else ("agrees" if rec.agrees else "DISAGREES")
            print(
                f"n={rec.n:>3}  predicted={rec.prediction.predicted:<8}"
                f"({rec.prediction.justification})  minS={rec.measured_min_sen}  {agree}",
                flush=True,
            )
            if rec.agrees is False:
                disagreements += 1
    return EXIT_VERIFY_FAIL if disagreements else EXIT_OK


# ---------------------------------------------------------------- verify


def _run_checkers(args) -> List:
    results = []
    max_n = args.max_n
    if args.theorem in ("all", "4.1"):
        results.append(
            verify_max_sensitivity(1, max_n or 1000, worker_count=args.workers)
        )
    if args.theorem in ("all", "4.2"):
        results.append(verify_p_squared(1, max_n or 500))
    if args.theorem in ("all", "4.3"):
        results.append(verify_all_ones(1, max_n or 1000))
    if args.theorem in ("all", "4.4"):
        results.append(
            verify_prime_min_sensitivity(
                1, max_n or 1000, worker_count=args.workers,
                hard_limit=args.hard_limit,
            )
        )
    if args.theorem in ("all", "table1"):
        if args.hard_limit < 26:
            raise ExhaustiveLimitError(
                f"table verification needs an exhaustive limit of at least 26, "
                f"current limit is {args.hard_limit}"
            )
        results.append(
            verify_table1(worker_count=args.workers, hard_limit=args.hard_limit)
        )
    return results


def cmd_verify(args, argv) -> int:
    start = time.perf_counter()
    results = _run_checkers(args)
    duration = time.perf_counter() - start
    engine = "gray-parallel" if args.workers > 1 else "gray"
    all_pass = all(r.passed for r in results)
    if args.format == "json":
        records = []
        for r in results:
            records.append({
                "theorem": r.theorem,
                "n_range": list(r.n_range),
                "passed": r.passed,
                "counterexample": None if r.counterexample is None
                else r.counterexample.to_string(),
                "outcomes": [
                    {
                        "n": o.n,
                        "check": o.check,
                        "expected": o.expected,
                        "measured": o.measured,
                        "passed": o.passed,
                        "applicable": o.applicable,
                        "note": o.note,
                    }
                    for o in r.outcomes
                ],
            })
        _emit_json(
            _manifest(argv, engine, args.hard_limit, args.workers, duration),
            records, sys.stdout,
        )
    elif args.format == "csv":
        rows = [
            {
                "theorem": r.theorem,
                "n": o.n,
                "check": o.check,
                "expected": o.expected,
                "measured": o.measured,
                "passed": o.passed,
                "applicable": o.applicable,
            }
            for r in results
            for o in r.outcomes
        ]
        _emit_csv(
            ["theorem", "n", "check", "expected", "measured", "passed", "applicable"],
            rows, sys.stdout,
        )
    else:
        for r in results:
            for o in r.outcomes:
                if not o.applicable:
                    status = "SKIP"
                else:
                    status = "PASS" if o.passed else "FAIL"
                detail = f"expected={o.expected} measured={o.measured}"
                if not o.applicable:
                    detail = o.note
                print(f"{status} {r.theorem} n={o.n} {o.check}: {detail}")
            verdict = "PASS" if r.passed else "FAIL"
            print(f"{verdict} {r.theorem} overall "
                  f"(n in [{r.n_range[0]}, {r.n_range[1]}])")
    return EXIT_OK if all_pass else EXIT_VERIFY_FAIL


# ---------------------------------------------------------------- avg


def cmd_avg(args, argv) -> int:
    cfg = SearchConfig(
        n=args.n, worker_count=args.workers,
        hard_limit=args.hard_limit, force=args.force,
    )
    start = time.perf_counter()
    report = parallel_scan(SimplifiedWSF(args.n), cfg)
    duration = time.perf_counter() - start
    frac = report.average_sensitivity
    record = {
        "n": args.n,
        "as_numerator": report.total_sensitivity,
        "as_denominator": 1 << args.n,
        "as_reduced": f"{frac.numerator}/{frac.denominator}",
        "as_decimal": f"{float(frac):.6f}",
        "minS": report.min_sen,
        "maxS": report.max_sen,
    }
    engine = "gray-parallel" if args.workers > 1 else "gray"
    if args.format == "json":
        _emit_json(
            _manifest(argv, engine, args.hard_limit, args.workers, duration),
            [record], sys.stdout,
        )
    elif args.format == "csv":
        _emit_csv(AVG_COLUMNS, [record], sys.stdout)
    else:
        print(
            f"AS = {record['as_numerator']}/{record['as_denominator']}"
            f" = {record['as_reduced']} ≈ {record['as_decimal']}"
        )
        print(f"minS = {report.min_sen}  maxS = {report.max_sen}")
    return EXIT_OK


# ---------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sensilab",
                     description="Sensitivity laboratory for weighted sum "
                                 "Boolean functions.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, workers=True, force=True):
        p.add_argument("--format", choices=["human", "csv", "json"],
                       default="human")
        if workers:
            p.add_argument("--workers", type=int, default=1)
        if force:
            p.add_argument("--force", action="store_true",
                           help="override the exhaustive hard limit")

    p = sub.add_parser("sens", help="evaluate one input")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input", required=True,
                   help="bitstring, leftmost character is the lowest index")
    p.add_argument("--family", choices=["simplified", "original"],
                   default="simplified")
    add_common(p, workers=False, force=False)
    p.set_defaults(func=cmd_sens)

    p = sub.add_parser("table", help="minS/maxS table up to --max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="compare rows n<=26 with the reference table")
    p.add_argument("--timings", action="store_true",
                   help="fill the elapsed_ms column (CSV output is no "
                        "longer run-to-run byte-identical)")
    add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", help="conjecture scanner over an n-range")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run the structural checkers")
    p.add_argument("--theorem", choices=["all", "4.1", "4.2", "4.3", "4.4",
                                         "table1"], default="all")
    p.add_argument("--max-n", type=int, default=None)
    add_common(p, force=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("avg", help="exact average sensitivity")
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_avg)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    args.hard_limit = hard_limit_from_env()
    try:
        return args.func(args, argv)
    except ContractViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExhaustiveLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
