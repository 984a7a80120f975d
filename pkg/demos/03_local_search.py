"""Tree moves, their incremental evaluation and the two local searches."""

# %%
import random

from mlas import arc_inversion_effect, arc_inversion_ls, branch_reattaching_ls, primary_schedule, \
    random_min_degree, reattach, reattaching_effect
from mlas.bench import generate_instance

inst = generate_instance(60, 0.25, seed=11)
t = random_min_degree(inst, random.Random(4))
ps = primary_schedule(t)
print("start makespan:", ps.makespan)

# %%
# Moving a vertex under another parent changes only the two paths to the
# root. The effect evaluator returns L(T) - L(T') from those paths alone;
# here it is checked against a full recomputation.
rng = random.Random(0)
shown = 0
while shown < 5:
    v, u = inst.arcs[rng.randrange(len(inst.arcs))]
    if u == t.parent[v] or t.is_descendant(u, v):
        continue
    fast = reattaching_effect(t, ps, v, u)
    slow = ps.makespan - primary_schedule(reattach(t, v, u)).makespan
    print(f"move {v} under {u}: incremental {fast:+d}, recomputed {slow:+d}")
    shown += 1

# %%
# Arc inversion swaps a vertex with its parent and rehangs the pair.
p = next(v for v in range(inst.n) if v != t.root and t.parent[v] != t.root)
pp = t.parent[p]
for u in inst.adjacency[p]:
    if u != pp and not t.is_descendant(u, pp):
        print(f"invert {p} with its parent {pp}, hang under {u}:",
              arc_inversion_effect(t, ps, p, u))
        break

# %%
# Both local searches only ever shorten the tree.
for ls in (branch_reattaching_ls, arc_inversion_ls):
    out = ls(t)
    print(f"{ls.__name__}: {ps.makespan} -> {primary_schedule(out).makespan}")
