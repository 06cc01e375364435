"""Command line front end.

Thin client over the same service layer the HTTP API uses.  Exit codes:
0 success, 1 property failure (a cross-check or campaign found a
counterexample), 2 usage error, 3 domain error (degenerate core, non-prime
modulus, singular companion, ...).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .errors import InternalInconsistency, RecurringError
from .models import PrimeReport, VerifyReport
from .service import build_prime_report, orbit_report, run_verify, sequence_rows, sweep_reports

PRIME_REPORT_FIELDS = list(PrimeReport.model_fields)


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag} expects a comma-separated integer list")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _report_csv_row(report: PrimeReport) -> list[str]:
    data = report.model_dump()
    data["t"] = ",".join(str(c) for c in report.t)
    data["factors"] = "*".join(
        f"({f.poly})^{f.multiplicity}" for f in report.factors
    )
    if report.idempotent_ranks is not None:
        data["idempotent_ranks"] = ";".join(str(r) for r in report.idempotent_ranks)
    return [_csv_cell(data[name]) for name in PRIME_REPORT_FIELDS]


def _reports_csv(reports: list[PrimeReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(PRIME_REPORT_FIELDS)
    for report in reports:
        writer.writerow(_report_csv_row(report))
    return buf.getvalue()


def _reports_table(reports: list[PrimeReport]) -> str:
    headers = [
        "p", "period", "preperiod", "class", "p|disc", "p|period", "agree",
        "units", "ranks", "factors",
    ]
    rows = []
    for r in reports:
        rows.append([
            str(r.p),
            str(r.period),
            str(r.preperiod),
            r.classification,
            "yes" if r.p_divides_discriminant else "no",
            "yes" if r.p_divides_period else "no",
            "-" if r.thm67_agree is None else ("yes" if r.thm67_agree else "NO"),
            "-" if r.unit_group_order is None else r.unit_group_order,
            "-" if r.idempotent_ranks is None else ",".join(map(str, r.idempotent_ranks)),
            " * ".join(f"({f.poly})^{f.multiplicity}" for f in r.factors),
        ])
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    first = reports[0]
    head = (
        f"core t=({','.join(map(str, first.t))})  discriminant={first.discriminant}"
        f"  exact_period={first.exact_period if first.exact_period is not None else '-'}"
    )
    return head + "\n" + "\n".join(lines) + "\n"


def _render_reports(reports: list[PrimeReport], fmt: str) -> str:
    if fmt == "json":
        return "".join(r.model_dump_json() + "\n" for r in reports)
    if fmt == "csv":
        return _reports_csv(reports)
    return _reports_table(reports)


def cmd_analyze(args) -> int:
    reports = [build_prime_report(args.t, p) for p in args.p]
    _emit(_render_reports(reports, args.format), args.out)
    if any(r.thm67_agree is False for r in reports):
        print("period/ramification equivalence FAILED; see reports", file=sys.stderr)
        return 1
    return 0


def cmd_sweep(args) -> int:
    result = sweep_reports(args.t, args.pmax)
    body = _render_reports(result.reports, args.format)
    summary = result.summary
    if args.format == "json":
        body += json.dumps({"summary": summary.model_dump()}) + "\n"
        _emit(body, args.out)
    elif args.format == "csv":
        _emit(body, args.out)
        print(
            f"summary: {summary.thm67_agreed}/{summary.thm67_checked} "
            "primes agree (p | period <=> ramified)",
            file=sys.stderr,
        )
    else:
        body += (
            f"summary: {summary.primes_checked} primes <= {summary.pmax}; "
            f"p | period <=> ramified holds at {summary.thm67_agreed}/"
            f"{summary.thm67_checked} applicable primes\n"
        )
        _emit(body, args.out)
    if summary.thm67_agreed != summary.thm67_checked:
        return 1
    return 0


def _verify_text(report: VerifyReport) -> str:
    lines = [
        f"seed={report.seed} k={report.k} coeff_bound={report.coeff_bound} "
        f"pmax={report.pmax} trials={report.trials}",
        f"cores checked: {report.cores_checked}",
        f"(core, prime) pairs checked: {report.pairs_checked}",
        f"failures: {len(report.failures)}",
    ]
    for failure in report.failures:
        lines.append(failure.model_dump_json())
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    report = run_verify(args.k, args.coeff_bound, args.pmax, args.trials, args.seed)
    if args.format == "json":
        _emit(report.model_dump_json() + "\n", args.out)
    else:
        _emit(_verify_text(report), args.out)
    return 0 if report.passed else 1


def cmd_sequence(args) -> int:
    if args.to < getattr(args, "from"):
        raise argparse.ArgumentTypeError("--to must be >= --from")
    result = sequence_rows(args.t, getattr(args, "from"), args.to, args.mod)
    if args.format == "json":
        text = "".join(row.model_dump_json() + "\n" for row in result.rows)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "gfp", "glp"])
        for row in result.rows:
            writer.writerow([row.n, row.gfp, row.glp])
        text = buf.getvalue()
    else:
        width = max(len(str(r.n)) for r in result.rows)
        text = "".join(
            f"{str(r.n).rjust(width)}  F={r.gfp}  G={r.glp}\n" for r in result.rows
        )
    _emit(text, args.out)
    return 0


def cmd_orbit(args) -> int:
    report = orbit_report(args.t, args.p, args.m)
    if args.format == "json":
        text = report.model_dump_json() + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["index", "state"])
        for i, state in enumerate(report.states):
            writer.writerow([i, " ".join(map(str, state))])
        text = buf.getvalue()
    else:
        lines = [f"({', '.join(map(str, state))})" for state in report.states]
        lines.append(
            f"length {report.length} (preperiod {report.preperiod}, period {report.period})"
        )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .api import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_common_output(sub, default_format: str = "table") -> None:
    sub.add_argument("--format", choices=["table", "json", "csv"], default=default_format)
    sub.add_argument("--out", default=None, help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recurring",
        description="Linear-recursion periods modulo primes and the rings behind them.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_analyze = subs.add_parser("analyze", help="full report for one core at given primes")
    p_analyze.add_argument("--t", required=True, type=lambda s: _parse_int_list(s, "--t"),
                           help="coefficients t1,t2,...,tk")
    p_analyze.add_argument("--p", required=True, type=lambda s: _parse_int_list(s, "--p"),
                           help="prime (or comma-separated primes)")
    _add_common_output(p_analyze)
    p_analyze.set_defaults(handler=cmd_analyze)

    p_sweep = subs.add_parser("sweep", help="reports for every prime up to a bound")
    p_sweep.add_argument("--t", required=True, type=lambda s: _parse_int_list(s, "--t"))
    p_sweep.add_argument("--pmax", required=True, type=int)
    _add_common_output(p_sweep)
    p_sweep.set_defaults(handler=cmd_sweep)

    p_verify = subs.add_parser("verify", help="seeded randomized verification campaign")
    p_verify.add_argument("--k", required=True, type=int)
    p_verify.add_argument("--coeff-bound", type=int, default=5)
    p_verify.add_argument("--pmax", type=int, default=31)
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=["table", "json"], default="table")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(handler=cmd_verify)

    p_seq = subs.add_parser("sequence", help="dump F and G over an index range")
    p_seq.add_argument("--t", required=True, type=lambda s: _parse_int_list(s, "--t"))
    p_seq.add_argument("--from", required=True, type=int)
    p_seq.add_argument("--to", required=True, type=int)
    p_seq.add_argument("--mod", type=int, default=None)
    _add_common_output(p_seq)
    p_seq.set_defaults(handler=cmd_sequence)

    p_orbit = subs.add_parser("orbit", help="companion orbit of a residue vector")
    p_orbit.add_argument("--t", required=True, type=lambda s: _parse_int_list(s, "--t"))
    p_orbit.add_argument("--p", required=True, type=int)
    p_orbit.add_argument("--m", required=True, type=lambda s: _parse_int_list(s, "--m"))
    _add_common_output(p_orbit)
    p_orbit.set_defaults(handler=cmd_orbit)

    p_serve = subs.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(handler=cmd_serve)

    return parser


def _validate(args, parser: argparse.ArgumentParser) -> None:
    if args.command == "sweep" and not 2 <= args.pmax <= 1_000_000:
        parser.error("--pmax must be between 2 and 1000000")
    if args.command == "verify" and args.k < 1:
        parser.error("--k must be >= 1")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    try:
        return args.handler(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except InternalInconsistency as exc:
        print(f"internal cross-check failed: {exc}", file=sys.stderr)
        return 1
    except RecurringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
