"""Genetic local search: seeded population, crossover, mutation, local search."""

# %%
from mlas import GlsParams, run_gls
from mlas.bench import generate_instance
from mlas.gls import trace_csv

inst = generate_instance(60, 0.3, seed=2)

# %%
# GLS1 improves offspring with arc inversion, GLS2 with branch reattaching.
# The run stops once the best length has not moved for three generations.
for ls in ("arc_inversion", "branch_reattaching"):
    tree, sched, trace = run_gls(inst, GlsParams(seed=1), ls)
    print(f"{ls}: best length {sched.length} after {trace[-1].generation} generations")
    print(trace_csv(trace))
