"""Command-line surface for the waiting-time library.

Five subcommands cover the library's capabilities:

    expect    exact waiting time, overlaps and wager profit for one pattern
    table     every canonical pattern of given lengths grouped by average
    dist      exact first-occurrence distribution out to a horizon
    simulate  seeded Monte Carlo games compared against the exact value
    verify    exact identity checks plus brute-force cross-validation

Each command renders as aligned text (default), CSV or JSON via --format,
written to stdout or to --output.  Exit codes: 0 success, 1 usage or parse
error, 2 verification failure, 3 internal guard tripped.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .counting import occurrence_counts, verify_identities
from .dyadic import DyadicRational
from .errors import CoinwaitError, SimulationRunawayError
from .oracle import exhaustive_tally, simulate
from .pattern import Pattern, expected_waiting_time, parse_pattern, waiting_time_report
from .table import waiting_time_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION_FAILED = 2
EXIT_INTERNAL_GUARD = 3

# JSON numbers above 53 bits would be corrupted by double-precision readers.
_JSON_SAFE_INT = (1 << 53) - 1


def _json_int(value: int):
    return value if abs(value) <= _JSON_SAFE_INT else str(value)


class _Parser(argparse.ArgumentParser):
    """argparse, but usage problems exit with code 1 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _length_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a length N or a range MIN..MAX, got {text!r}"
        ) from None
    return lo, hi


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "csv", "json"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--output",
        type=Path,
        default=None,
        metavar="PATH",
        help="write output to PATH instead of stdout",
    )

    parser = _Parser(
        prog="coinwait",
        description="Exact waiting times for heads/tails patterns on a fair coin.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_expect = sub.add_parser(
        "expect", parents=[common], help="exact waiting time for one pattern"
    )
    p_expect.add_argument("pattern", help="pattern text, 0/1 or T/H")
    p_expect.add_argument(
        "--stake", type=int, default=None, help="up-front stake for the wager view"
    )

    p_table = sub.add_parser(
        "table", parents=[common], help="group patterns by exact average"
    )
    p_table.add_argument(
        "--lengths",
        type=_length_range,
        default=(2, 6),
        metavar="MIN..MAX",
        help="pattern lengths to tabulate (default: 2..6)",
    )
    p_table.add_argument(
        "--cap", type=int, default=12, help="largest allowed length (default: 12)"
    )
    p_table.add_argument(
        "--all-patterns",
        action="store_true",
        help="include the 0-leading complements as well",
    )

    p_dist = sub.add_parser(
        "dist", parents=[common], help="exact first-occurrence distribution"
    )
    p_dist.add_argument("pattern", help="pattern text, 0/1 or T/H")
    p_dist.add_argument(
        "--horizon", type=int, default=32, help="largest game length listed"
    )

    p_sim = sub.add_parser(
        "simulate", parents=[common], help="Monte Carlo games vs the exact value"
    )
    p_sim.add_argument("pattern", help="pattern text, 0/1 or T/H")
    p_sim.add_argument(
        "--trials", type=int, default=100_000, help="number of games (default 100000)"
    )
    p_sim.add_argument("--seed", type=int, default=1, help="PRNG seed (default 1)")

    p_verify = sub.add_parser(
        "verify", parents=[common], help="exact identities and oracle cross-checks"
    )
    p_verify.add_argument(
        "--lengths",
        type=_length_range,
        default=(2, 6),
        metavar="MIN..MAX",
        help="pattern lengths to verify (default: 2..6)",
    )
    p_verify.add_argument(
        "--horizon", type=int, default=64, help="identity horizon (default 64)"
    )
    p_verify.add_argument(
        "--oracle-n",
        type=int,
        default=10,
        help="exhaustive enumeration bound (default 10)",
    )
    p_verify.add_argument(
        "--cap", type=int, default=12, help="largest allowed length (default: 12)"
    )
    return parser


# -- small rendering helpers ------------------------------------------


def _aligned(rows: list[list[str]], right: set[int]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [
            cell.rjust(widths[i]) if i in right else cell.ljust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(command: str, inputs: dict, results) -> str:
    payload = {"command": command, "inputs": inputs, "results": results}
    return json.dumps(payload, indent=2) + "\n"


# -- command handlers --------------------------------------------------


def _cmd_expect(args) -> tuple[str, int]:
    if args.stake is not None and args.stake < 0:
        raise CoinwaitError("stake must be nonnegative")
    report = waiting_time_report(parse_pattern(args.pattern), args.stake)
    overlaps = report.correlation.overlap_lengths()
    if args.format == "json":
        results = {
            "pattern": str(report.pattern),
            "heads_tails": report.pattern.heads_tails(),
            "length": len(report.pattern),
            "overlaps": list(overlaps),
            "expected_tosses": _json_int(report.expected_tosses),
            "lower_bound": _json_int(report.lower_bound),
            "upper_bound": _json_int(report.upper_bound),
            "stake": report.stake,
            "expected_profit": None
            if report.expected_profit is None
            else _json_int(report.expected_profit),
        }
        inputs = {"pattern": args.pattern, "stake": args.stake}
        return _json_text("expect", inputs, results), EXIT_OK
    if args.format == "csv":
        header = [
            "pattern",
            "length",
            "overlaps",
            "expected_tosses",
            "lower_bound",
            "upper_bound",
            "stake",
            "expected_profit",
        ]
        row = [
            str(report.pattern),
            len(report.pattern),
            ";".join(str(j) for j in overlaps),
            report.expected_tosses,
            report.lower_bound,
            report.upper_bound,
            "" if report.stake is None else report.stake,
            "" if report.expected_profit is None else report.expected_profit,
        ]
        return _csv_text(header, [row]), EXIT_OK
    lines = [
        f"pattern           {report.pattern} ({report.pattern.heads_tails()})",
        f"length            {len(report.pattern)}",
        f"overlaps (c_j=1)  {' '.join(str(j) for j in overlaps)}",
        f"expected tosses   {report.expected_tosses}",
        f"bounds            {report.lower_bound}..{report.upper_bound}",
    ]
    if report.stake is not None:
        lines.append(f"stake             {report.stake}")
        lines.append(f"expected profit   {report.expected_profit:+d}")
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_table(args) -> tuple[str, int]:
    lo, hi = args.lengths
    if not (2 <= lo <= hi <= args.cap):
        raise CoinwaitError(
            f"lengths must satisfy 2 <= min <= max <= {args.cap}, got {lo}..{hi}"
        )
    rows = waiting_time_table(
        range(lo, hi + 1), include_complements=args.all_patterns
    )
    if args.format == "json":
        results = [
            {
                "length": row.length,
                "average": _json_int(row.average),
                "patterns": list(row.patterns),
            }
            for row in rows
        ]
        inputs = {
            "lengths": f"{lo}..{hi}",
            "all_patterns": bool(args.all_patterns),
        }
        return _json_text("table", inputs, results), EXIT_OK
    if args.format == "csv":
        flat = [
            [row.length, row.average, pattern]
            for row in rows
            for pattern in row.patterns
        ]
        return _csv_text(["length", "average", "pattern"], flat), EXIT_OK
    cells = [["length", "average", "patterns"]]
    for row in rows:
        cells.append([str(row.length), str(row.average), " ".join(row.patterns)])
    text = _aligned(cells, right={0, 1})
    if not args.all_patterns:
        text += (
            "\nonly patterns starting with 1 are listed; each 0-leading"
            " complement (heads and tails swapped) has the same average\n"
        )
    return text, EXIT_OK


def _cmd_dist(args) -> tuple[str, int]:
    p = parse_pattern(args.pattern)
    m = len(p)
    if args.horizon < m:
        raise CoinwaitError(
            f"horizon must be >= pattern length {m}, got {args.horizon}"
        )
    counts = occurrence_counts(p, args.horizon)
    rows = []
    cumulative_tau = 0  # running sum of tau_k * 2**(N-k), denominator 2**N
    for n in range(m, args.horizon + 1):
        cumulative_tau += counts.tau[n] << (args.horizon - n)
        prob = DyadicRational(counts.tau[n], n)
        cml = DyadicRational(cumulative_tau, args.horizon)
        residual = DyadicRational(counts.sigma[n], n)
        rows.append((n, counts.tau[n], prob, cml, residual))
    final_residual = rows[-1][4]
    if args.format == "json":
        results = {
            "rows": [
                {
                    "n": n,
                    "tau": _json_int(tau),
                    "probability": prob.fraction_str(),
                    "decimal": prob.decimal_str(),
                    "cumulative": cml.decimal_str(),
                    "residual": res.decimal_str(),
                }
                for n, tau, prob, cml, res in rows
            ],
            "residual": final_residual.fraction_str(),
        }
        inputs = {"pattern": args.pattern, "horizon": args.horizon}
        return _json_text("dist", inputs, results), EXIT_OK
    if args.format == "csv":
        flat = [
            [n, tau, prob.fraction_str(), prob.decimal_str(), cml.decimal_str(),
             res.decimal_str()]
            for n, tau, prob, cml, res in rows
        ]
        header = ["n", "tau", "probability", "decimal", "cumulative", "residual"]
        return _csv_text(header, flat), EXIT_OK
    cells = [["n", "tau", "probability", "decimal", "cumulative", "residual"]]
    for n, tau, prob, cml, res in rows:
        cells.append(
            [str(n), str(tau), prob.fraction_str(), prob.decimal_str(),
             cml.decimal_str(), res.decimal_str()]
        )
    text = f"pattern {p} ({p.heads_tails()}), horizon {args.horizon}\n"
    text += _aligned(cells, right={0, 1})
    text += (
        f"\nmass not yet seen by the horizon: {final_residual.fraction_str()}"
        f" = {final_residual.decimal_str()}\n"
    )
    return text, EXIT_OK


def _cmd_simulate(args) -> tuple[str, int]:
    p = parse_pattern(args.pattern)
    if args.trials < 1:
        raise CoinwaitError(f"trials must be >= 1, got {args.trials}")
    result = simulate(p, args.trials, args.seed)
    exact = expected_waiting_time(p)
    z = None
    if result.sample_stderr > 0:
        z = (result.sample_mean - exact) / result.sample_stderr
    if args.format == "json":
        results = {
            "pattern": str(p),
            "trials": result.trials,
            "seed": result.seed,
            "generator": result.generator,
            "sample_mean": result.sample_mean,
            "sample_stderr": result.sample_stderr,
            "exact": _json_int(exact),
            "z_score": z,
            "max_game_length_seen": result.max_game_length_seen,
        }
        inputs = {"pattern": args.pattern, "trials": args.trials, "seed": args.seed}
        return _json_text("simulate", inputs, results), EXIT_OK
    if args.format == "csv":
        header = [
            "pattern",
            "trials",
            "seed",
            "generator",
            "sample_mean",
            "sample_stderr",
            "exact",
            "z_score",
            "max_game_length_seen",
        ]
        row = [
            str(p),
            result.trials,
            result.seed,
            result.generator,
            repr(result.sample_mean),
            repr(result.sample_stderr),
            exact,
            "" if z is None else repr(z),
            result.max_game_length_seen,
        ]
        return _csv_text(header, [row]), EXIT_OK
    lines = [
        f"pattern            {p} ({p.heads_tails()})",
        f"trials             {result.trials}",
        f"seed               {result.seed} ({result.generator})",
        f"sample mean        {result.sample_mean:.6f}",
        f"std error          {result.sample_stderr:.6f}",
        f"exact expectation  {exact}",
        f"z-score            {'n/a' if z is None else format(z, '+.3f')}",
        f"longest game seen  {result.max_game_length_seen}",
    ]
    return "\n".join(lines) + "\n", EXIT_OK


def _verify_one(pattern, horizon: int, oracle_n: int) -> dict:
    m = len(pattern)
    report = verify_identities(pattern, horizon)
    n_top = max(m, oracle_n)
    counts = occurrence_counts(pattern, max(horizon, n_top))
    oracle_failures = []
    for n in range(m, n_top + 1):
        tally = exhaustive_tally(pattern, n)
        if tally.avoiding_count != counts.sigma[n]:
            oracle_failures.append(f"sigma at n={n}")
        for j in range(m, n + 1):
            if tally.first_occurrence_counts[j] != counts.tau[j]:
                oracle_failures.append(f"tau at j={j} (n={n})")
    failures = (
        [f"doubling at n={n}" for n in report.doubling_failures]
        + [f"expansion at n={n}" for n in report.expansion_failures]
        + [f"telescoping at n={n}" for n in report.telescoping_failures]
        + oracle_failures
    )
    return {
        "pattern": str(pattern),
        "length": m,
        "doubling_ok": not report.doubling_failures,
        "expansion_ok": not report.expansion_failures,
        "telescoping_ok": not report.telescoping_failures,
        "oracle_ok": not oracle_failures,
        "failures": failures,
    }


def _cmd_verify(args) -> tuple[str, int]:
    lo, hi = args.lengths
    if not (1 <= lo <= hi <= args.cap):
        raise CoinwaitError(
            f"lengths must satisfy 1 <= min <= max <= {args.cap}, got {lo}..{hi}"
        )
    if args.horizon < 2 * hi:
        raise CoinwaitError(
            f"horizon must be >= twice the largest length ({2 * hi}),"
            f" got {args.horizon}"
        )
    results = []
    for length in range(lo, hi + 1):
        for value in range(1 << (length - 1), 1 << length):
            bits = tuple((value >> (length - 1 - i)) & 1 for i in range(length))
            results.append(_verify_one(Pattern(bits), args.horizon, args.oracle_n))
    all_ok = all(r["oracle_ok"] and not r["failures"] for r in results)
    status = EXIT_OK if all_ok else EXIT_VERIFICATION_FAILED
    if args.format == "json":
        inputs = {
            "lengths": f"{lo}..{hi}",
            "horizon": args.horizon,
            "oracle_n": args.oracle_n,
        }
        return _json_text(
            "verify", inputs, {"patterns": results, "all_ok": all_ok}
        ), status
    if args.format == "csv":
        header = [
            "pattern",
            "length",
            "doubling_ok",
            "expansion_ok",
            "telescoping_ok",
            "oracle_ok",
        ]
        flat = [
            [r["pattern"], r["length"], r["doubling_ok"], r["expansion_ok"],
             r["telescoping_ok"], r["oracle_ok"]]
            for r in results
        ]
        return _csv_text(header, flat), status
    lines = [
        f"checked {len(results)} canonical patterns (lengths {lo}..{hi}),"
        f" horizon {args.horizon}, enumeration up to n={args.oracle_n}"
    ]
    for r in results:
        if r["failures"]:
            lines.append(f"FAIL {r['pattern']}: " + ", ".join(r["failures"]))
    lines.append(
        "all identities hold" if all_ok else "verification FAILED (see above)"
    )
    return "\n".join(lines) + "\n", status


_COMMANDS = {
    "expect": _cmd_expect,
    "table": _cmd_table,
    "dist": _cmd_dist,
    "simulate": _cmd_simulate,
    "verify": _cmd_verify,
}


def _write_output(text: str, path: Path | None):
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        text, status = _COMMANDS[args.command](args)
    except SimulationRunawayError as exc:
        print(f"internal guard tripped: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_GUARD
    except (CoinwaitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write_output(text, args.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
