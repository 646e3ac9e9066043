"""Command-line interface.

Subcommands: merge, partition, dump-ctable, dump-dtable, bench. Reports go to
stdout; diagnostics go to stderr; the exit code is 0 only when validation and
computation succeed.
"""

import argparse
import sys

import numpy as np

from .bench import bench_scaling
from .curveio import as_composite, load_curve, run_merge, report_to_json, save_report
from .curves import BezierSegment
from .dualbasis import c_table
from .errors import MergeError
from .merging import CONVENTIONS, MergeParams
from .metrics import arc_length_partition
from .subdivision import d_table
from .svgplot import emit_svg


def _csv_lines(matrix) -> list:
    return [",".join(repr(float(x)) for x in row) for row in np.asarray(matrix)]


def _write_lines(lines, path):
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


def _add_merge_parser(sub):
    p = sub.add_parser("merge", help="merge a composite curve into one Bezier curve")
    p.add_argument("input", help="curve document (JSON)")
    p.add_argument("--m", type=int, required=True, help="target degree")
    p.add_argument("--k", type=int, default=1, help="continuity order at t=0 (default 1)")
    p.add_argument("--l", type=int, default=1, help="continuity order at t=1 (default 1)")
    p.add_argument("--convention", choices=CONVENTIONS, default="local",
                   help="endpoint derivative convention (default local)")
    p.add_argument("--samples", type=int, default=500,
                   help="grid size N for the maximum error (default 500)")
    p.add_argument("--partition", choices=("arc", "uniform", "file"), default=None,
                   help="knot choice (default: file's partition if present, else arc)")
    p.add_argument("--report", metavar="PATH", help="also write the JSON report here")
    p.add_argument("--svg", metavar="PATH", help="write an overlay SVG here")


def _cmd_merge(args) -> int:
    doc = load_curve(args.input)
    params = MergeParams(m=args.m, k=args.k, l=args.l, derivative_convention=args.convention)
    mode = args.partition if args.partition is not None else "auto"
    report = run_merge(doc, params, n_samples=args.samples, partition_mode=mode)
    if args.svg:
        merged = BezierSegment(np.asarray(report.controls))
        emit_svg(doc, merged, args.svg)
    if args.report:
        save_report(report, args.report)
    sys.stdout.write(report_to_json(report) + "\n")
    return 0


def _cmd_partition(args) -> int:
    doc = load_curve(args.input)
    part = arc_length_partition(doc.segments)
    sys.stdout.write(",".join(repr(float(t)) for t in part.knots) + "\n")
    return 0


def _cmd_dump_ctable(args) -> int:
    table = c_table(args.m, args.k, args.l)
    _write_lines(_csv_lines(table.coeffs), args.out)
    return 0


def _cmd_dump_dtable(args) -> int:
    doc = load_curve(args.input)
    mode = args.partition if args.partition is not None else "auto"
    curve = as_composite(doc, mode)
    dtab = d_table(args.m, curve.partition)
    lines = []
    for i in range(dtab.n_segments):
        lines.append(f"# segment {i + 1}")
        lines += _csv_lines(dtab.coeffs[i])
    _write_lines(lines, args.out)
    return 0


def _cmd_bench(args) -> int:
    result = bench_scaling(
        s_values=args.s_values,
        m_values=args.m_values,
        repeats=args.repeats,
        m_fixed=args.m_fixed,
        s_fixed=args.s_fixed,
    )
    out = sys.stdout
    out.write(f"segment sweep (m = {result.m_fixed}):\n")
    for s, t in zip(result.s_values, result.s_times):
        out.write(f"  s = {s:4d}   {t * 1e3:10.3f} ms\n")
    out.write(f"degree sweep (s = {result.s_fixed}):\n")
    for m, t in zip(result.m_values, result.m_times):
        out.write(f"  m = {m:4d}   {t * 1e3:10.3f} ms\n")
    out.write(f"log-log slope in s: {result.slope_s:.3f}\n")
    out.write(f"log-log slope in m: {result.slope_m:.3f}\n")
    return 0


def _int_list(text: str) -> list:
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bezmerge",
        description="Merge adjacent Bezier segments into a single constrained "
                    "least-squares Bezier curve.")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_merge_parser(sub)

    p = sub.add_parser("partition", help="print the arc-length knot partition")
    p.add_argument("input", help="curve document (JSON)")

    p = sub.add_parser("dump-ctable", help="dump dual-basis coefficients as CSV")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("dump-dtable", help="dump per-segment restriction tables as CSV")
    p.add_argument("input", help="curve document (JSON)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--partition", choices=("arc", "uniform", "file"), default=None)
    p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("bench", help="measure merge-time scaling in s and m")
    p.add_argument("--s-values", type=_int_list, default=[2, 4, 8, 16])
    p.add_argument("--m-values", type=_int_list, default=[8, 16, 32])
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--m-fixed", type=int, default=12)
    p.add_argument("--s-fixed", type=int, default=4)

    return parser


_COMMANDS = {
    "merge": _cmd_merge,
    "partition": _cmd_partition,
    "dump-ctable": _cmd_dump_ctable,
    "dump-dtable": _cmd_dump_dtable,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (MergeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
