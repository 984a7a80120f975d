"""Variable neighbourhood search from the best constructive tree."""

# %%
from mlas import VnsParams, run_vns
from mlas.bench import generate_instance
from mlas.vns import starting_solution, trace_csv

inst = generate_instance(100, 0.3, seed=1)
_, start = starting_solution(inst)
print("starting length:", start.length)

# %%
# Shaking moves K random vertices; K grows while nothing improves and drops
# back to 1 when the descent finds a shorter schedule.
tree, sched, trace = run_vns(inst, VnsParams(seed=0))
print("final length:", sched.length)
print("".join(trace_csv(trace).splitlines(keepends=True)[:12]))
