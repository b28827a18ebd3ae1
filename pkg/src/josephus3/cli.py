"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 capacity exceeded, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bench import emit_function_graph, emit_gain_series, iteration_comparison
from .core import Algorithm, CapacityError, EvalResult, InvalidInputError
from .extremal import enumerate_extremal, eval_extremal
from .fixedpoint import enumerate_fixed_points, eval_fixed_point
from .oracles import SIMULATE_CAP, euler_eval, simulate
from .verify import DEFAULT_SIMULATE_LIMIT, cross_check

EXIT_MISMATCH, EXIT_USAGE, EXIT_CAPACITY, EXIT_IO = 1, 2, 3, 4

EVAL_FIELDS = ["n", "j", "algorithm", "bracket_low", "bracket_high", "frak_m", "m_bar", "iterations"]


def positive_int(text):
    try:
        value = int(text.strip(), 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return value


def _fraction(x):
    return f"{x.numerator}/{x.denominator}"


def _float(x):
    return repr(float(x))


def render_table(header, rows, fmt):
    """Serialize rows as plain text, CSV (LF, header) or JSON lines."""
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(["" if v is None else v for v in row] for row in rows)
    elif fmt == "json":
        for row in rows:
            buf.write(json.dumps(dict(zip(header, row))) + "\n")
    else:
        for row in rows:
            buf.write(" ".join(str(v) for v in row) + "\n")
    return buf.getvalue()


def _evaluate(n, algorithm):
    if algorithm is Algorithm.FIXED_POINT:
        return eval_fixed_point(n)
    if algorithm is Algorithm.EXTREMAL:
        return eval_extremal(n)
    if algorithm is Algorithm.EULER:
        return EvalResult(n, euler_eval(n), algorithm, iterations=n)
    return EvalResult(n, simulate(n).survivor, algorithm, iterations=n - 1)


def cmd_eval(args):
    res = _evaluate(args.n, Algorithm(args.algorithm))
    if args.format == "plain":
        return f"{res.j}\n"
    d = res.as_dict()
    if args.format == "json":
        return json.dumps(d) + "\n"
    return render_table(EVAL_FIELDS, [[d[k] for k in EVAL_FIELDS]], "csv")


def cmd_fixed_points(args):
    rows = [(r.ell, r.n_p, r.m_bar) for r in enumerate_fixed_points(args.count)]
    return render_table(["ell", "n_p", "m_bar"], rows, args.format)


def cmd_extremal_points(args):
    states = [s for s in enumerate_extremal(args.limit) if s.n_e <= args.limit]
    rows = [(s.index, s.n_e, s.f, s.r, s.j_value) for s in states]
    return render_table(["index", "n_e", "f", "r", "j"], rows, args.format)


def cmd_bench(args):
    c = iteration_comparison(args.n, timed=args.timed)
    if args.format == "plain":
        out = (
            f"fixed={c.fixed_point_iters} extremal={c.extremal_iters} pure={c.pure_point_count}"
            f" extremal_stop={c.extremal_stop_iters} iteration_ratio={float(c.iteration_ratio) * 100:.4f}%\n"
        )
        if args.timed:
            out += f"# non-normative wall clock: fixed={c.seconds_fixed_point:.6f}s extremal={c.seconds_extremal:.6f}s\n"
        return out
    header = ["n", "fixed_point_iters", "extremal_iters", "pure_point_count",
              "extremal_stop_iters", "iteration_ratio", "iteration_ratio_float"]
    row = [c.n, c.fixed_point_iters, c.extremal_iters, c.pure_point_count,
           c.extremal_stop_iters, _fraction(c.iteration_ratio), _float(c.iteration_ratio)]
    if args.timed:
        header += ["nonnormative_seconds_fixed_point", "nonnormative_seconds_extremal"]
        row += [repr(c.seconds_fixed_point), repr(c.seconds_extremal)]
    return render_table(header, [row], args.format)


def cmd_gain(args):
    series = emit_gain_series(args.q_max)
    if args.format == "plain":
        return "".join(
            f"{q} {float(r):.6g}% ratio={float(ratio):.6g}%\n" for q, _, r, ratio in series.rows()
        )
    header = ["q", "m_bar_prefix_sum", "r_percent", "r_percent_float",
              "iteration_ratio_percent", "iteration_ratio_percent_float"]
    rows = [
        (q, s, _fraction(r), _float(r), _fraction(ratio), _float(ratio))
        for q, s, r, ratio in series.rows()
    ]
    return render_table(header, rows, args.format)


def cmd_graph(args):
    rows = [(n, j, str(c)) for n, j, c in emit_function_graph(args.limit)]
    return render_table(["n", "j", "class"], rows, args.format)


def cmd_verify(args):
    bad = cross_check(args.limit, args.simulate_limit, args.jobs)
    out = f"{len(bad)} mismatches\n"
    if bad:
        first = bad[0]
        detail = " ".join(f"{k}={v}" for k, v in first.values.items())
        sys.stderr.write(f"first mismatch at n={first.n}: {detail}\n")
    return out, (EXIT_MISMATCH if bad else 0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="josephus3",
        description="Evaluate the k=3 Josephus function J3 through its fixed points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, fmt_default="plain"):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=["plain", "csv", "json"], default=fmt_default,
                       help=f"output format (default: {fmt_default})")
        p.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("eval", cmd_eval, "evaluate J3(n)")
    p.add_argument("n", type=positive_int)
    p.add_argument("--algorithm", choices=[str(a) for a in Algorithm], default="fixed-point",
                   help=f"default: fixed-point; simulate is capped at n <= {SIMULATE_CAP}")

    p = add("fixed-points", cmd_fixed_points, "list the first COUNT fixed points")
    p.add_argument("count", type=positive_int)

    p = add("extremal-points", cmd_extremal_points, "list high extremal points up to LIMIT")
    p.add_argument("limit", type=positive_int)

    p = add("verify", cmd_verify, "cross-check all evaluators for n = 1..LIMIT")
    p.add_argument("limit", type=positive_int, nargs="?", default=10**5,
                   help="default: 100000")
    p.add_argument("--simulate-limit", type=int, default=DEFAULT_SIMULATE_LIMIT,
                   help=f"also compare against simulation for n <= this (default: {DEFAULT_SIMULATE_LIMIT})")
    p.add_argument("--jobs", type=positive_int, default=1, help="worker processes (default: 1)")

    p = add("bench", cmd_bench, "compare iteration counts of the two algorithms at n")
    p.add_argument("n", type=positive_int)
    p.add_argument("--timed", action="store_true", help="add non-normative wall-clock timings")

    p = add("gain", cmd_gain, "gain series r(q) for q = 1..Q_MAX")
    p.add_argument("q_max", type=positive_int)

    p = add("graph", cmd_graph, "J3(n) with point classes for n = 1..LIMIT", fmt_default="csv")
    p.add_argument("limit", type=positive_int, nargs="?", default=50, help="default: 50")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except CapacityError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAPACITY
    except InvalidInputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    text, status = result if isinstance(result, tuple) else (result, 0)
    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    return status


if __name__ == "__main__":
    sys.exit(main())
