#!/usr/bin/env python3
"""Emit the two reference figures as SVG files.

Figure 1: an acute triangle with a pi/4 angle, its altitudes and the
right-angled minimal inscribed triangle.  Figure 2: the golden rectangle
construction.
"""

import argparse
import math

from fagnano.geometry import Triangle
from fagnano.golden import build
from fagnano.render import RenderSpec, render_golden, render_triangle


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default=".")
    args = parser.parse_args()

    spec = RenderSpec()
    fig1 = render_triangle(Triangle.from_angles(math.pi / 4, 3 * math.pi / 8), spec)
    fig2 = render_golden(build(), spec)
    for name, svg in (("figure1.svg", fig1), ("figure2.svg", fig2)):
        path = f"{args.outdir}/{name}"
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(svg)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
