"""
A census of small negative curves
=================================

For fixed m, scan the triangles with vertices (0,0), (m - h/K, 0), (m, h)
that have enough lattice points to force a curve of order m, solve for the
curve on each, and group them up to monomial change of coordinates. Every
class found matches one of the family triangles. An SVG of each class
representative is written next to this script.
"""

import pathlib

from negcurves import render
from negcurves.search import verify_classification

out = pathlib.Path(__file__).with_name("census_svg")
out.mkdir(exist_ok=True)

for m in range(1, 6):
    report = verify_classification(m)
    print(f"m={m}: {report.cells} cells, {len(report.records)} triangles, {len(report.classes)} curve classes")
    for i, c in enumerate(report.classes):
        rec = report.records[c.members[0]]
        print("   ", c.representative.label(), "   also", [mt.label() for mt in c.matches[1:]])
        path = out / f"m{m}_class{i}.svg"
        path.write_text(render.svg(rec.triangle, rec.poly, title=c.representative.label()))
    for note in report.notes:
        print("    note:", note)
