"""Render the Apollonian window with tangency labels.

    python scripts/render_window.py --depth 5 --labels triples -o window.svg
"""
import argparse

from pythspin import gasket


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--depth", type=int, default=5)
    ap.add_argument("--max-curvature", type=int)
    ap.add_argument("--labels", choices=("none", "triples", "spinors"), default="triples")
    ap.add_argument("-o", "--output", default="window.svg")
    args = ap.parse_args()
    circles = gasket.expand(args.depth, args.max_curvature)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(gasket.render_svg(circles, gasket.SvgOptions(labels=args.labels)))
    sub = [g for g in circles if gasket.is_subboundary(g.circle) and gasket.is_first_quadrant(g.circle)]
    print(f"{len(circles)} circles, {len(sub)} labelled first-quadrant subboundary circles -> {args.output}")


if __name__ == "__main__":
    main()
