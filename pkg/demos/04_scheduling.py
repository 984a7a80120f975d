"""Conflict-free schedules under the protocol interference model."""

# %%
from mlas import ndr_schedule, primary_schedule, round_heuristic, validate_schedule
from mlas.bench import generate_instance
from mlas.scheduler import FullSchedule, schedule_to_json

inst = generate_instance(30, 0.3, seed=5)
tree = round_heuristic(inst)

# %%
# The greedy scheduler fills one slot at a time, trying ready vertices in
# order of decreasing degree. A vertex blocked at its parent may send to
# another neighbour instead, so the tree can change on the way.
t2, sched = ndr_schedule(inst, tree)
print("primary makespan of input tree:", primary_schedule(tree).makespan)
print("full-model length:", sched.length)
print("parents changed by the scheduler:", sum(a != b for a, b in zip(tree.parent, t2.parent)))
print("violations:", validate_schedule(inst, t2, sched))

# %%
# The validator explains what is wrong with a broken schedule.
broken = FullSchedule([1] * inst.n, list(t2.parent), 1)
broken.send_slot[inst.sink] = 0
for violation in validate_schedule(inst, t2, broken)[:5]:
    print(" ", violation)

# %%
# Schedules travel as JSON records.
print(schedule_to_json(sched)[:200], "...")
