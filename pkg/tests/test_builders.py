import math
import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from mlas.builders import (
    cheapest_arc,
    mlst,
    random_min_degree,
    random_shortest_path,
    round_heuristic,
    sample_frontier_arc,
    spt,
    weighted_index,
)
from mlas.latency import primary_schedule

from support import all_trees, graph_instance, path_instance, random_instance, star_instance

BUILDERS = [spt, round_heuristic, mlst]
RANDOM_BUILDERS = [random_shortest_path, random_min_degree]


@pytest.mark.parametrize("build", BUILDERS + RANDOM_BUILDERS)
def test_path_and_star(build):
    args = (random.Random(1),) if build in RANDOM_BUILDERS else ()
    path = path_instance(6)
    assert build(path, *args).parent == [-1, 0, 1, 2, 3, 4]
    star = star_instance(5)
    assert build(star, *args).parent == [-1, 0, 0, 0, 0, 0]


def test_round_heuristic_star_makespan():
    t = round_heuristic(star_instance(4))
    assert primary_schedule(t).makespan == 4


def test_mlst_prefers_light_parent():
    # a (depth 1, two children) costs 3, b (depth 1, no children) costs 1
    s, a, b, x, y, w = range(6)
    adjacency = [[a, b], [s, x, y, w], [s, w], [a], [a], [a, b]]
    in_tree = [True, True, True, True, True, False]
    depth = [0, 1, 1, 2, 2, 0]
    n_children = [2, 2, 0, 0, 0, 0]
    assert cheapest_arc([s, a, b, x, y], adjacency, in_tree, depth, n_children) == (w, b)


def test_mlst_tie_breaks_by_ids():
    s, a, b, c = range(4)
    adjacency = [[a, b], [s, c], [s, c], [a, b]]
    assert cheapest_arc([s], adjacency, [True, False, False, False], [0] * 4, [0] * 4) == (a, s)
    assert cheapest_arc([s, a, b], adjacency, [True] * 3 + [False], [0, 1, 1, 0], [2, 0, 0, 0]) == (c, a)


def test_weighted_index_never_picks_zero_weight():
    rng = random.Random(3)
    assert {weighted_index([0.0, 1.0, 0.0], rng) for _ in range(500)} == {1}


def test_frontier_draw_frequencies():
    frontier = [(0, 10), (1, 11), (2, 12)]
    degree = {0: 1, 1: 2, 2: 4}
    expect = [4 / 7, 2 / 7, 1 / 7]
    draws = 10000
    rng = random.Random(11)
    counts = Counter(sample_frontier_arc(frontier, degree, rng) for _ in range(draws))
    for arc, p in zip(frontier, expect):
        sigma = math.sqrt(draws * p * (1 - p))
        assert abs(counts[arc] - draws * p) <= 3 * sigma


def _exact_tree_probabilities(inst):
    """Distribution of trees when every frontier arc (u, v) is drawn with
    weight 1 / max(1, deg_T(u)), enumerated exactly."""
    out = Counter()

    def grow(parent, deg, prob):
        frontier = [(u, v) for u in range(inst.n) if parent[u] != -2
                    for v in inst.adjacency[u] if parent[v] == -2]
        if not frontier:
            out[tuple(parent)] += prob
            return
        weights = [1.0 / max(1, deg[u]) for u, _ in frontier]
        total = sum(weights)
        for (u, v), w in zip(frontier, weights):
            p2, d2 = list(parent), list(deg)
            p2[v] = u
            d2[u] += 1
            d2[v] = 1
            grow(p2, d2, prob * w / total)

    start = [-2] * inst.n
    start[inst.sink] = -1
    grow(start, [0] * inst.n, 1.0)
    return out


def test_random_min_degree_distribution():
    inst = graph_instance(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    expect = _exact_tree_probabilities(inst)
    draws = 10000
    rng = random.Random(5)
    counts = Counter(tuple(random_min_degree(inst, rng).parent) for _ in range(draws))
    assert set(counts) <= set(expect)
    for tree, p in expect.items():
        sigma = math.sqrt(draws * p * (1 - p))
        assert abs(counts[tree] - draws * p) <= 3 * sigma + 1e-9


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_builders_valid_and_deterministic(seed):
    rng = random.Random(seed)
    inst = random_instance(rng, (2, 60))
    for build in BUILDERS:
        t = build(inst)
        t.validate()
        assert build(inst) == t
    for build in RANDOM_BUILDERS:
        t = build(inst, random.Random(seed))
        t.validate()
        assert build(inst, random.Random(seed)) == t
    for t in (spt(inst), random_shortest_path(inst, rng)):
        assert t.depth() == list(inst.level)


def test_round_heuristic_near_optimal_on_five_vertices():
    rng = random.Random(2024)
    checked = 0
    while checked < 60:
        inst = random_instance(rng, (5, 5), (0.3, 0.9))
        best = min(primary_schedule(t).makespan for t in all_trees(inst))
        assert primary_schedule(round_heuristic(inst)).makespan <= best + 1
        checked += 1
