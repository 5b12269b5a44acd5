"""Render a small gallery of diagrams to SVG files.

Run:  python demos/05_render_gallery.py
Files land in ./rendered_diagrams/.
"""
import os

from rumer import ValenceScheme, enumerate_rumer, render_svg

outdir = "rendered_diagrams"
os.makedirs(outdir, exist_ok=True)

# A few hand-picked schemes: nested chords, a crossing pair (legal to draw,
# it is just not a Rumer diagram), and parallel bonds bowed apart.
gallery = {
    "nested": ValenceScheme(4, [(1, 4), (2, 3)]),
    "crossing": ValenceScheme(4, [(1, 3), (2, 4)]),
    "double_bond": ValenceScheme(2, [(1, 2), (1, 2)]),
    "six_ring": ValenceScheme(6, [(1, 2), (3, 4), (5, 6)]),
}
for name, scheme in gallery.items():
    path = os.path.join(outdir, f"{name}.svg")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(render_svg(scheme))
    print(f"wrote {path}  ({scheme})")

# Every non-crossing diagram on 5 vertices with 2 bonds, one file each.
for idx, diagram in enumerate(enumerate_rumer(5, 2)):
    path = os.path.join(outdir, f"rumer_5_2_{idx:02d}.svg")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(render_svg(diagram))
print(f"wrote {idx + 1} diagrams for n=5, m=2 into {outdir}/")
