"""render_heatmaps: sweep CSVs in, multi-panel heatmap image out."""

from __future__ import annotations

import argparse
import sys

from .render import CsvFormatError, HeatmapSpec, parse_sweep_csv, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_heatmaps",
        description="Render expected-profit-difference sweep CSVs as "
        "failure-probability heatmaps, one panel per external price.",
    )
    parser.add_argument("csv", nargs="+", help="input sweep CSV file(s)")
    parser.add_argument("--out", required=True, help="output image path (e.g. grids.png)")
    parser.add_argument(
        "--vmax",
        type=float,
        default=None,
        help="symmetric color bound; defaults to the largest |value|",
    )
    parser.add_argument("--dpi", type=int, default=150, help="raster resolution")
    args = parser.parse_args(argv)

    spec = HeatmapSpec(
        csv_paths=tuple(args.csv), out_path=args.out, vmax=args.vmax, dpi=args.dpi
    )
    try:
        panel_count = sum(len(parse_sweep_csv(path)) for path in spec.csv_paths)
        out = render(spec)
    except (CsvFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {panel_count} panel(s) to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
