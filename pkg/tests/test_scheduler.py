import random

from hypothesis import given, settings, strategies as st

from mlas.builders import mlst, round_heuristic, spt
from mlas.exact import exact_min_latency
from mlas.latency import primary_schedule
from mlas.scheduler import FullSchedule, ndr_schedule, schedule_from_json, schedule_to_json, \
    validate_schedule
from mlas.tree import AggTree

from support import graph_instance, path_instance, random_instance, random_tree, star_instance


def test_star():
    inst = star_instance(5)
    t, s = ndr_schedule(inst, AggTree(inst, [-1] + [0] * 5))
    assert s.length == 5
    assert validate_schedule(inst, t, s) == []


def test_path():
    inst = path_instance(4)
    t, s = ndr_schedule(inst, AggTree(inst, [-1, 0, 1, 2]))
    assert s.length == 3
    assert s.send_slot == [0, 3, 2, 1]
    assert s.recipient == [-1, 0, 1, 2]


def test_same_slot_siblings_conflict():
    inst = star_instance(2)
    t = AggTree(inst, [-1, 0, 0])
    bad = validate_schedule(inst, t, FullSchedule([0, 1, 1], [-1, 0, 0], 1))
    assert [v.rule for v in bad] == ["receiver conflict"]


def test_parent_before_child():
    inst = path_instance(3)
    t = AggTree(inst, [-1, 0, 1])
    bad = validate_schedule(inst, t, FullSchedule([0, 1, 2], [-1, 0, 1], 2))
    assert [v.rule for v in bad] == ["ordering"]


def test_interference_from_neighbor_of_receiver():
    # 1 -> 0 and 3 -> 2 in one slot, but 3 is within range of 0
    inst = graph_instance(4, [(0, 1), (0, 2), (2, 3), (0, 3)])
    t = AggTree(inst, [-1, 0, 0, 2])
    bad = validate_schedule(inst, t, FullSchedule([0, 1, 2, 1], [-1, 0, 0, 2], 2))
    assert [v.rule for v in bad] == ["receiver conflict"]


def test_half_duplex():
    inst = path_instance(3)
    t = AggTree(inst, [-1, 0, 1])
    bad = validate_schedule(inst, t, FullSchedule([0, 2, 2], [-1, 0, 1], 2))
    assert "half-duplex" in [v.rule for v in bad]


def test_missing_send_and_wrong_recipient():
    inst = graph_instance(3, [(0, 1), (0, 2), (1, 2)])
    t = AggTree(inst, [-1, 0, 1])
    bad = validate_schedule(inst, t, FullSchedule([0, 2, 0], [-1, 0, -1], 2))
    assert [v.rule for v in bad] == ["missing send"]
    bad = validate_schedule(inst, t, FullSchedule([0, 2, 1], [-1, 0, 0], 2))
    assert [v.rule for v in bad] == ["recipient"]


def test_json_round_trip():
    inst = path_instance(4)
    _, s = ndr_schedule(inst, AggTree(inst, [-1, 0, 1, 2]))
    assert schedule_from_json(schedule_to_json(s), 4) == s


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_ndr_valid_on_random_trees(seed):
    rng = random.Random(seed)
    inst = random_instance(rng, (2, 80), (0.15, 0.5))
    t = random_tree(inst, rng)
    snapshot = list(t.parent)
    t2, s = ndr_schedule(inst, t)
    t2.validate()
    assert validate_schedule(inst, t2, s) == []
    assert s.length >= primary_schedule(t2).makespan
    assert t.parent == snapshot
    t3, s3 = ndr_schedule(inst, t)
    assert t3 == t2 and s3 == s


def test_heuristic_trees_schedule_cleanly():
    rng = random.Random(17)
    for _ in range(30):
        inst = random_instance(rng, (10, 100), (0.15, 0.5))
        for build in (spt, round_heuristic, mlst):
            t, s = ndr_schedule(inst, build(inst))
            assert validate_schedule(inst, t, s) == []


def test_ndr_close_to_exact_on_five_vertices():
    rng = random.Random(99)
    for _ in range(60):
        inst = random_instance(rng, (5, 5), (0.3, 0.9))
        best, _, _ = exact_min_latency(inst)
        for build in (spt, round_heuristic, mlst):
            _, s = ndr_schedule(inst, build(inst))
            assert best <= s.length <= best + 2
