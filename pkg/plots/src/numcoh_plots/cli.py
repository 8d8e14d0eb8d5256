"""Command-line renderer: numcoh-plots --in-dir <csvs> --out-dir <images>."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .recipes import RECIPES, SchemaError
from .render import render_all


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="numcoh-plots", description=__doc__)
    parser.add_argument("--in-dir", required=True, help="directory holding the figure CSVs")
    parser.add_argument("--out-dir", required=True, help="directory to write images into")
    parser.add_argument("--format", default="png", choices=["png", "svg", "pdf"])
    parser.add_argument(
        "--figure",
        choices=sorted(RECIPES),
        default=None,
        help="render a single figure set instead of all nine",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    in_dir, out_dir = Path(args.in_dir), Path(args.out_dir)
    try:
        if args.figure:
            from .render import render

            written = render(RECIPES[args.figure], in_dir, out_dir, args.format)
        else:
            written = render_all(in_dir, out_dir, args.format)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
