"""An experiment matrix, its CSV summary and a DOT drawing."""

# %%
from pathlib import Path

from mlas.bench import export_dot, load_config, run_matrix, solve, summary_csv

config = load_config("""
[experiment]
algorithms = H1 H2 H3 GLS1 GLS2 VNS EXACT
reps = 3
seed = 0
timing = false

[grid]
n = 8 20
d = 0.5
cases = 2

[gls]
pop_size = 20
""")

# %%
# Constructive heuristics and the exact solver run once per instance,
# the metaheuristics once per seed; opt_pct is filled where the exact
# solver could run.
print(summary_csv(run_matrix(config)))

# %%
# Render one solution; arcs carry their slot as label and colour.
iid, inst = config.instances[-1]
tree, sched, _ = solve(inst, "VNS", seed=0)
out = Path("vns_tree.dot")
out.write_text(export_dot(inst, tree, sched))
print(f"wrote {out} ({iid}, L={sched.length}); draw with: neato -n -Tpng {out} -o tree.png")
