#!/usr/bin/env python3
import sys
import json
import logging
import argparse
from fractions import Fraction

from boxball.analysis import Analyzer
from boxball.automata import BBSState, PBBSState, bbs_trajectory, pbbs_trajectory
from boxball.config import Config
from boxball.constants import (
    CONFIG_FILE,
    EXIT_OK,
    EXIT_PRECISION,
    EXIT_VERIFY,
    OUTPUT_FORMATS,
    PRINTED_LIMIT_TAU,
    VERSION,
)
from boxball.curve import curve_svg, rational
from boxball.errors import BoxBallError, UsageError
from boxball.theta import format_tau
from boxball.utils.logutils import recent_warnings, setup_logging
from boxball.utils.render import ascii_rows, csv_rows, json_rows, trajectory_extent
from boxball.utils.statefile import parse_range, read_states

# ANSI color codes (Dracula theme)
INFO = "\033[38;2;139;233;253m"       # cyan
WARN = "\033[38;2;255;184;108m"       # orange
GOOD = "\033[38;2;80;250;123m"        # green
BAD = "\033[38;2;255;85;85m"          # red
RESET = "\033[0m"                     # reset

logger = logging.getLogger('cli')


def paint(text, color, stream=None):
    """Colorize only when writing to a terminal."""
    stream = stream or sys.stdout
    return f"{color}{text}{RESET}" if stream.isatty() else text


def parse_vector(text):
    """'0,3' or '1/2,-1' into a tuple of Fractions."""
    try:
        return tuple(Fraction(part.strip()) for part in text.split(",") if part.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid vector '{text}': use comma separated rationals such as 0,3 or 1/2,-1")


def collect_states(args):
    """[(kind, text)] from --bbs/--pbbs/--state/--state-file."""
    states = []
    if args.bbs:
        states.append(("bbs", args.bbs))
    if args.pbbs:
        states.append(("pbbs", args.pbbs))
    if args.state:
        states.append(("pbbs", args.state))
    if args.state_file:
        states += [("pbbs", s) for s in read_states(args.state_file)]
    if not states:
        raise UsageError("no state given: use --state, --pbbs, --bbs or --state-file")
    return states


def periodic(kind, text):
    if kind != "pbbs":
        raise UsageError("this subcommand needs a periodic state (--state or --pbbs)")
    return PBBSState.parse(text)


def cmd_simulate(args, analyzer, fmt):
    out = []
    for kind, text in collect_states(args):
        if kind == "bbs":
            rows = bbs_trajectory(BBSState.parse(text), args.steps)
        else:
            rows = pbbs_trajectory(PBBSState.parse(text), args.steps)
        start, stop = parse_range(args.window, "window") if args.window else trajectory_extent(rows)
        if args.window:
            stop += 1
        match fmt:
            case "csv":
                out += csv_rows(rows, start, stop)
            case "json":
                out.append(json_rows(rows, start, stop))
            case _:
                out += ascii_rows(rows, start, stop)
    print("\n".join(out))
    return EXIT_OK


def cmd_analyze(args, analyzer, fmt):
    c0 = parse_vector(args.c0_override) if args.c0_override else None
    documents = []
    for kind, text in collect_states(args):
        report = analyzer.analyze(periodic(kind, text), c0)
        if fmt == "svg":
            print(curve_svg(report.curve, report.points))
            continue
        doc = report.to_document()
        if args.svg:
            with open(args.svg, "w") as f:
                f.write(curve_svg(report.curve, report.points))
            logger.info(f"Curve drawing written to {args.svg}")
        documents.append(doc)
    if documents:
        print(json.dumps(documents[0] if len(documents) == 1 else documents, indent=2))
    return EXIT_OK


def cmd_verify(args, analyzer, fmt):
    c0 = parse_vector(args.c0_override) if args.c0_override else None
    failed = False
    lines = []
    for kind, text in collect_states(args):
        results = []
        if kind == "pbbs" and args.mode in ("periodic", "both"):
            report = analyzer.analyze(PBBSState.parse(text), c0)
            results.append(analyzer.verify_periodic(report, args.steps))
        if args.mode in ("limit", "both"):
            window = None
            if args.window:
                lo, hi = parse_range(args.window, "window")
                window = range(lo, hi + 1)
            state = PBBSState.parse(text) if kind == "pbbs" else _as_periodic(text)
            results.append(analyzer.verify_limit(state, args.steps, window))
        for result in results:
            failed = failed or not result.passed
            color = GOOD if result.passed else BAD
            lines.append(paint(f"{text}  {result.describe()}", color))
    print("\n".join(lines))
    return EXIT_VERIFY if failed else EXIT_OK


def _as_periodic(text):
    """Cells of a non-periodic state, padded so they form a valid periodic state."""
    state = BBSState.parse(text)
    return PBBSState(state.cells + (0,) * (state.balls + 1))


def cmd_stability(args, analyzer, fmt):
    m_lo, m_hi = parse_range(args.m_range, "m-range") if args.m_range else (1, analyzer.max_m)
    reports = []
    for kind, text in collect_states(args):
        state = periodic(kind, text)
        reports.append(analyzer.stability(state, m_lo, m_hi))
    if fmt == "json":
        print(json.dumps([
            {
                "state": str(r.state),
                "m0": r.m0,
                "stable": r.stable,
                "rows": [{"M": row.M, "solitons": list(row.solitons), "sum": [rational(x) for x in row.aj_sum]}
                         for row in r.rows],
            }
            for r in reports
        ], indent=2))
    else:
        for r in reports:
            print(f"state {r.state}")
            print(f"{'M':>5}  {'solitons':<16} Abel-Jacobi sum")
            for row in r.rows:
                print(f"{row.M:>5}  {str(list(row.solitons)):<16} ({', '.join(str(x) for x in row.aj_sum)})")
            color = GOOD if r.stable else WARN
            print(paint(f"verdict: {r.verdict()}", color))
            if r.stable:
                limit, _ = analyzer.limit_context(r.state, r)
                print(f"limit tau: {format_tau(limit)}")
                print(f"printed two-soliton example tau, for reference: {PRINTED_LIMIT_TAU}")
    return EXIT_OK


COMMANDS = {
    "simulate": cmd_simulate,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "stability": cmd_stability,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="boxball",
        description="Box-ball systems, their tropical spectral curves and theta-function solutions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument("-c", "--config", help="Path to an alternative config.yaml file")
    parser.add_argument("--log-level", help="Override the configured log level for this run")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--state", help="Periodic state, e.g. '.11...1...'")
    common.add_argument("--pbbs", help="Periodic state")
    common.add_argument("--bbs", help="Non-periodic state (empty boxes beyond both ends)")
    common.add_argument("--state-file", help="File with one state per line; '#' starts a comment")
    common.add_argument("--steps", type=int, help="Number of time steps")
    common.add_argument("--window", help="Cell range a:b (inclusive)")
    common.add_argument("--m-range", help="Vacuum padding range a:b (inclusive)")
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Output format")
    common.add_argument("--depth", type=int, help="Newton-Puiseux depth for this run")
    common.add_argument("--epsilon", type=int, help="Zero-test epsilon exponent k (epsilon = 10^-k) for this run")
    common.add_argument("--c0-override", help="Replace the computed c0 (testing), e.g. '0,4'")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("simulate", parents=[common], help="Print the automaton trajectory")
    analyze = sub.add_parser("analyze", parents=[common], help="Curve and spectral report as JSON")
    analyze.add_argument("--svg", help="Also write a drawing of the curve to this file")
    verify = sub.add_parser("verify", parents=[common], help="Compare theta/tau solutions with the automaton")
    verify.add_argument("--mode", choices=["periodic", "limit", "both"], default="both")
    sub.add_parser("stability", parents=[common], help="Abel-Jacobi sum under vacuum padding")
    return parser


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = Config(args.config or CONFIG_FILE, persist=bool(args.config))
        config.override({
            ("puiseux", "depth"): args.depth,
            ("puiseux", "epsilon_exponent"): args.epsilon,
            ("verify", "steps"): args.steps,
            ("output", "format"): args.format,
        })
        setup_logging(config, args.log_level)
        if args.steps is None:
            args.steps = config.get("verify", "steps")
        analyzer = Analyzer.from_config(config)
        fmt = config.get("output", "format", default="ascii")
        return COMMANDS[args.command](args, analyzer, fmt)
    except BoxBallError as e:
        print(paint(f"error: {e}", BAD, sys.stderr), file=sys.stderr)
        if e.exit_code == EXIT_PRECISION:
            print("hint: raise --depth or puiseux.depth/precision in config.yaml", file=sys.stderr)
        for line in recent_warnings()[-5:]:
            print(paint(line, WARN, sys.stderr), file=sys.stderr)
        return e.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
