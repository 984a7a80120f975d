import random

import pytest
from hypothesis import given, settings, strategies as st

from mlas.gls import shake
from mlas.scheduler import validate_schedule
from mlas.tree import tree_distance
from mlas.vns import VnsParams, descend, run_vns, starting_solution, trace_csv

from support import path_instance, random_instance, random_tree


def test_params_validation():
    with pytest.raises(ValueError):
        VnsParams(k_max=0)
    with pytest.raises(ValueError):
        VnsParams(stall_limit=0)


def test_path():
    inst = path_instance(6)
    tree, sched, trace = run_vns(inst, VnsParams(k_max=3, seed=0))
    assert sched.length == 5
    assert max(r.outer_iteration for r in trace) == 3
    # every outer loop walks K = 0..k_max once when nothing improves
    assert [r.K for r in trace] == [0, 1, 2, 3] * 3


def test_improves_on_start_and_monotone():
    rng = random.Random(40)
    for _ in range(5):
        inst = random_instance(rng, (20, 60), (0.2, 0.4))
        _, start = starting_solution(inst)
        tree, sched, trace = run_vns(inst, VnsParams(k_max=5, seed=1))
        assert validate_schedule(inst, tree, sched) == []
        assert sched.length <= start.length
        best = [r.best_L for r in trace]
        assert best == sorted(best, reverse=True)
        assert best[-1] == sched.length
        assert all(r.current_L >= r.best_L for r in trace)


def test_descend_never_worsens():
    rng = random.Random(41)
    for _ in range(10):
        inst = random_instance(rng, (10, 50))
        t, s = starting_solution(inst)
        t2, s2 = descend(inst, t, s)
        assert s2.length <= s.length
        assert validate_schedule(inst, t2, s2) == []


def test_deterministic():
    inst = random_instance(random.Random(42), (30, 30))
    a = run_vns(inst, VnsParams(k_max=5, seed=3))
    b = run_vns(inst, VnsParams(k_max=5, seed=3))
    assert a.tree == b.tree
    assert [r[:4] for r in a.trace] == [r[:4] for r in b.trace]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 8))
def test_shake_radius(seed, k):
    rng = random.Random(seed)
    inst = random_instance(rng, (5, 40))
    t = random_tree(inst, rng)
    out = shake(t, k, rng)
    out.validate()
    assert tree_distance(t, out) <= k


def test_trace_csv():
    text = trace_csv(run_vns(path_instance(4), VnsParams(k_max=1, seed=0)).trace)
    assert text.splitlines()[0] == "outer_iteration,K,current_L,best_L,elapsed_ms"
