"""Command-line figure rendering: `plots render --spec spec.json` plus
shorthands for the common figure shapes. Exit codes: 0 success, 1 runtime
failure (e.g. missing column, named in the message), 2 usage error."""
from __future__ import annotations

import argparse
import sys

from .figures import FigureSpec, MissingColumn, render


def _spec_from_args(args) -> FigureSpec:
    if args.command == "render":
        return FigureSpec.from_json(args.spec)
    if args.command == "fig1":
        return FigureSpec(
            kind="line-series",
            inputs=[{"path": args.a, "label": args.label_a},
                    {"path": args.b, "label": args.label_b}],
            out=args.out, title=args.title or "Average index by methodology",
            ylabel="average CD_5")
    if args.command == "fig3":
        return FigureSpec(kind="stacked-share", inputs=[{"path": args.csv}],
                          out=args.out,
                          title=args.title or "Backward-citation categories",
                          ylabel="share of patents")
    if args.command == "fig7":
        return FigureSpec(kind="grouped-line",
                          inputs=[{"path": args.csv, "column": args.column}],
                          out=args.out,
                          title=args.title or "Highly disruptive patents by technology",
                          ylabel=args.column)
    if args.command == "matrix":
        return FigureSpec(kind="matrix-heatmap", inputs=[{"path": args.csv}],
                          out=args.out,
                          title=args.title or "Methodology conversion matrix",
                          xlabel="", ylabel="")
    raise AssertionError(args.command)


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plots", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", help="render a figure described by a JSON spec")
    r.add_argument("--spec", required=True)

    f1 = sub.add_parser("fig1", help="two yearly-average series as lines")
    f1.add_argument("--a", required=True)
    f1.add_argument("--b", required=True)
    f1.add_argument("--label-a", default="truncated (I)")
    f1.add_argument("--label-b", default="full (II)")

    f3 = sub.add_parser("fig3", help="stacked backward-citation category shares")
    f3.add_argument("--csv", required=True)

    f7 = sub.add_parser("fig7", help="per-technology lines from a grouped CSV")
    f7.add_argument("--csv", required=True)
    f7.add_argument("--column", default="normalized")

    m = sub.add_parser("matrix", help="conversion-matrix heatmap")
    m.add_argument("--csv", required=True)

    for s in (f1, f3, f7, m):
        s.add_argument("--out", required=True)
        s.add_argument("--title", default="")
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        out = render(_spec_from_args(args))
    except MissingColumn as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
