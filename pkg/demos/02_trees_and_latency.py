"""Aggregation trees, the constructive builders and primary-conflict latency."""

# %%
import random

from mlas import mlst, primary_schedule, random_min_degree, random_shortest_path, \
    round_heuristic, spt
from mlas.bench import generate_instance

inst = generate_instance(40, 0.3, seed=3)

# %%
# Each builder returns a spanning tree rooted at the sink. When only
# siblings compete for their parent, a tree's best schedule length follows
# from a bottom-up recursion over the children's finishing times.
builders = {
    "shortest path": spt(inst),
    "round heuristic": round_heuristic(inst),
    "mlst": mlst(inst),
    "random shortest path": random_shortest_path(inst, random.Random(1)),
    "random min degree": random_min_degree(inst, random.Random(1)),
}
for name, t in builders.items():
    ps = primary_schedule(t)
    print(f"{name:22s} depth {max(t.depth()):2d}  sink children {len(t.children[t.root]):2d}  "
          f"primary makespan {ps.makespan}")

# %%
# The schedule itself: every child sends after all of its own children and
# siblings never share a slot.
t = builders["mlst"]
ps = primary_schedule(t)
for v in t.preorder()[:8]:
    print(f"vertex {v:2d} -> {t.parent[v]:2d}  slot {ps.send_slot[v]}  f={ps.f[v]}")
