"""Exact minimum latency on small instances."""

# %%
from mlas import exact_min_latency, ndr_schedule, validate_schedule
from mlas.bench import generate_instance
from mlas.builders import HEURISTIC_TREES

# The search walks slot by slot over sets of vertices that have already
# sent, choosing every recipient on the fly, so trees and schedules are
# optimised together.
for seed in range(5):
    inst = generate_instance(9, 0.45, seed)
    L, tree, sched = exact_min_latency(inst)
    assert validate_schedule(inst, tree, sched) == []
    heur = {name: ndr_schedule(inst, build(inst))[1].length for name, build in HEURISTIC_TREES.items()}
    print(f"seed {seed}: optimum {L}, heuristics {heur}")
