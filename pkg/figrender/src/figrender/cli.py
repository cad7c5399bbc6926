"""Command line wrapper: render-figure --preset fig1 --csv ... --out fig.png"""

import argparse
import sys

from .reader import SchemaError
from .renderer import FigureSpec, render


def main(argv=None):
    parser = argparse.ArgumentParser(prog="render-figure", description=__doc__)
    parser.add_argument("--preset", default="", choices=["", "fig1", "fig2"],
                        help="adds the preset's closed-form reference lines")
    parser.add_argument("--csv", nargs="+", required=True,
                        help="one CSV per figure column, in order")
    parser.add_argument("--baseline", nargs="*", default=[],
                        help="optional baseline CSVs (drawn dashed), same order")
    parser.add_argument("--labels", nargs="*", default=[],
                        help="optional column titles")
    parser.add_argument("--out", required=True, help="output image path")
    args = parser.parse_args(argv)

    try:
        spec = FigureSpec(
            csv_paths=args.csv,
            baseline_paths=args.baseline,
            preset=args.preset,
            column_labels=args.labels,
            output_path=args.out,
        )
        path = render(spec)
    except (SchemaError, ValueError, OSError) as exc:
        print(f"render-figure: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
