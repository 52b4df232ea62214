#!/usr/bin/env python3
"""Render the three diagram styles for the GL(2) cube-plus-dual example.

Writes window.svg, wallcross.svg, and faces.svg into figures/ (or a chosen
directory): the window with its characters and the wall bullets on the
diagonal, the crossing bijection arrows, and the highlighted wall faces with
their daggers.
"""
import argparse
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from qswindows import catalog, svg
from qswindows.rep import QSRep
from qswindows.root_data import RootDatum
from qswindows.windows import Context


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="figures")
    args = parser.parse_args()

    rep = QSRep.build(RootDatum.gl(2), catalog.GL2_WEIGHTS)
    ctx = Context(rep)
    delta = (Fraction(-1, 4), Fraction(-1, 4))
    delta2 = (Fraction(3, 4), Fraction(3, 4))

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "window.svg").write_text(svg.window_figure(rep, ctx, delta))
    (out / "wallcross.svg").write_text(svg.crossing_figure(rep, ctx, delta, delta2))
    (out / "faces.svg").write_text(svg.faces_figure(rep, ctx, delta, delta2))
    print(f"wrote 3 figures to {out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
