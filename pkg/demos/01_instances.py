"""Point sets, unit disk graphs and the sink.

Run with ``python demos/01_instances.py``.
"""

# %%
# An instance starts from points in the unit square. The OR-Library layout
# is a count followed by one "x y" line per point.
from mlas import build_instance, load_points, sink_of
from mlas.bench import generate_instance, write_orlib

text = "5\n0.10 0.50\n0.30 0.55\n0.50 0.50\n0.70 0.45\n0.50 0.72\n"
ps = load_points(text)
print("points:\n", ps.points)
print("sink (closest to the centre):", sink_of(ps))

# %%
# Two points are linked when they lie within the critical distance d.
# Hop levels are breadth-first distances from the sink.
inst = build_instance(ps, d=0.25)
for v in range(inst.n):
    print(f"vertex {v}: level {inst.level[v]}, neighbours {inst.adjacency[v]}")

# %%
# Raising d only ever adds edges.
wider = build_instance(ps, d=0.45)
print("edges at d=0.25:", sorted(inst.edges()))
print("edges at d=0.45:", sorted(wider.edges()))

# %%
# Random connected instances are drawn by rejection; the seed fixes the draw.
g = generate_instance(30, 0.3, seed=7)
print(f"generated n={g.n}, sink={g.sink}, max level={max(g.level)}")
print(write_orlib(g.point_set).splitlines()[:3])
