"""Genetic local search over aggregation trees."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import NamedTuple

from .builders import random_min_degree, random_shortest_path, round_heuristic, mlst, spt, weighted_index
from .errors import SelectionError
from .latency import arc_inversion_ls, branch_reattaching_ls
from .scheduler import ndr_schedule
from .tree import AggTree

LOCAL_SEARCHES = {
    "arc_inversion": arc_inversion_ls,
    "branch_reattaching": branch_reattaching_ls,
}

# stands in for 1/0 in the crossover weight
WEIGHT_CAP = 1e6


@dataclass
class GlsParams:
    pop_size: int = 50
    offsp_size: int = 20
    fp_it_count: int = 150
    sp_proportion: float = 0.6
    pm: float = 0.5
    pls: float = 0.5
    k_max: int | None = None  # None means floor(n / 3)
    stall_limit: int = 3
    seed: int | None = None

    def __post_init__(self):
        if self.pop_size < 3:
            raise ValueError("pop_size must be at least 3")
        if self.offsp_size < 1:
            raise ValueError("offsp_size must be at least 1")
        if self.k_max is not None and self.k_max < 1:
            raise ValueError("k_max must be at least 1")
        if self.stall_limit < 1:
            raise ValueError("stall_limit must be at least 1")
        for name in ("sp_proportion", "pm", "pls"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")

    def mutation_radius(self, n):
        return self.k_max if self.k_max is not None else max(1, n // 3)


@dataclass
class Individual:
    tree: AggTree
    schedule: object
    born: int = 0

    @property
    def full_length(self):
        return self.schedule.length

    @property
    def fitness(self):
        return 1.0 / self.schedule.length


class SearchResult(NamedTuple):
    tree: AggTree
    schedule: object
    trace: list


class GlsTraceRow(NamedTuple):
    generation: int
    best_L: int
    mean_L: float
    elapsed_ms: float


def evaluate(inst, tree, born=0):
    t, s = ndr_schedule(inst, tree)
    return Individual(t, s, born)


def initialize_population(inst, p, rng):
    pop, keys = [], set()

    def offer(tree):
        ind = evaluate(inst, tree)
        key = ind.tree.key()
        if key not in keys:
            keys.add(key)
            pop.append(ind)

    for build in (spt, round_heuristic, mlst):
        offer(build(inst))
    i = 0
    while i < p.fp_it_count and len(pop) < p.pop_size:
        if rng.random() < p.sp_proportion:
            offer(random_shortest_path(inst, rng))
        else:
            offer(random_min_degree(inst, rng))
        i += 1
    return pop


def select_pairs(pop, count, rng):
    """Fitness-proportional pairs of distinct population members."""
    if len(pop) < 2:
        raise SelectionError("selection needs at least two individuals")
    weights = [ind.fitness for ind in pop]
    pairs = []
    for _ in range(count):
        i = weighted_index(weights, rng)
        rest = weights[:i] + weights[i + 1:]
        j = weighted_index(rest, rng)
        if j >= i:
            j += 1
        pairs.append((pop[i], pop[j]))
    return pairs


def arc_weight(degree, level_gap):
    """Crossover preference for a parent of tree degree ``degree`` lying
    ``level_gap`` hops closer to the sink than the child."""
    k = abs(level_gap - 2)
    return 1.0 / degree + (1.0 / k if k else WEIGHT_CAP)


def crossover(t1, t2, rng):
    """Child tree taking each vertex's parent from one of the two parents.

    Vertices are visited by increasing hop level. A vertex whose two
    candidate arcs both close a cycle is left detached and reconnected once
    every other vertex has been placed.
    """
    inst = t1.inst
    level = inst.level
    parent = [-1] * inst.n

    def root_of(x):
        while parent[x] >= 0:
            x = parent[x]
        return x

    order = sorted((v for v in range(inst.n) if v != inst.sink), key=lambda v: (level[v], v))
    detached = []
    for v in order:
        v1, v2 = t1.parent[v], t2.parent[v]
        ok1 = root_of(v1) != v
        ok2 = ok1 if v1 == v2 else root_of(v2) != v
        if v1 == v2 or not ok2:
            choice = v1 if ok1 else None
        elif not ok1:
            choice = v2
        else:
            w1 = arc_weight(t1.degree(v1), level[v] - level[v1])
            w2 = arc_weight(t2.degree(v2), level[v] - level[v2])
            choice = v1 if rng.random() * (w1 + w2) < w1 else v2
        if choice is None:
            detached.append(v)
        else:
            parent[v] = choice
    _reconnect(inst, parent, detached, root_of)
    return AggTree(inst, parent)


def _reconnect(inst, parent, detached, root_of):
    """Hang every detached component onto the sink's component.

    A component whose root has no edge to the sink side is re-rooted at its
    first vertex (breadth-first from the old root) that does.
    """
    adjacency, level, sink = inst.adjacency, inst.level, inst.sink
    pending = list(detached)
    while pending:
        anchored = [v for v in range(inst.n) if root_of(v) == sink]
        anchored_set = set(anchored)
        progress = False
        for v in list(pending):
            opts = [u for u in adjacency[v] if u in anchored_set]
            if opts:
                parent[v] = min(opts, key=lambda u: (level[u], u))
                pending.remove(v)
                progress = True
        if progress:
            continue
        v = pending.pop(0)
        children = {}
        for x in range(inst.n):
            if parent[x] >= 0:
                children.setdefault(parent[x], []).append(x)
        queue, w = [v], None
        for x in queue:
            if any(u in anchored_set for u in adjacency[x]):
                w = x
                break
            queue.extend(sorted(children.get(x, ())))
        path = [w]
        while path[-1] != v:
            path.append(parent[path[-1]])
        for a, b in zip(path[1:], path):
            parent[a] = b
        opts = [u for u in adjacency[w] if u in anchored_set]
        parent[w] = min(opts, key=lambda u: (level[u], u))


def draw_radius(k_max, rng):
    """K in [1, k_max] with probability proportional to 1/K."""
    return 1 + weighted_index([1.0 / k for k in range(1, k_max + 1)], rng)


def shake(t, k, rng):
    """``k`` random reattachments along arcs outside the tree; draws that
    would close a cycle are skipped."""
    t = t.copy()
    arcs = t.inst.arcs
    if len(arcs) <= t.n - 1:
        return t
    for _ in range(k):
        while True:
            v, u = arcs[rng.randrange(len(arcs))]
            if t.parent[v] != u:
                break
        if not t.is_descendant(u, v):
            t._move(v, u)
    return t


def mutate(t, p, rng):
    return shake(t, draw_radius(p.mutation_radius(t.n), rng), rng)


def _join_key(ind):
    return (ind.full_length, -ind.born, ind.tree.key())


def run_gls(inst, p=None, ls="arc_inversion", rng=None):
    """Evolve trees until the best length stalls ``p.stall_limit`` times.

    Returns ``SearchResult(tree, schedule, trace)``.
    """
    p = p or GlsParams()
    rng = rng if rng is not None else random.Random(p.seed)
    local_search = LOCAL_SEARCHES[ls]
    start = time.perf_counter()

    pop = sorted(initialize_population(inst, p, rng), key=_join_key)
    trace = []

    def record(gen):
        lengths = [ind.full_length for ind in pop]
        trace.append(GlsTraceRow(gen, lengths[0], sum(lengths) / len(lengths),
                                 (time.perf_counter() - start) * 1000.0))

    record(0)
    best = pop[0]
    gen = stall = 0
    while stall < p.stall_limit:
        gen += 1
        if len(pop) >= 2:
            pairs = select_pairs(pop, p.offsp_size, rng)
        else:
            pairs = [(pop[0], pop[0])] * p.offsp_size
        children = []
        for a, b in pairs:
            child = crossover(a.tree, b.tree, rng)
            if rng.random() < p.pm:
                child = mutate(child, p, rng)
            if rng.random() < p.pls:
                child = local_search(child)
            children.append(child)
        offspring = [evaluate(inst, c, gen) for c in children]
        pop = sorted(pop + offspring, key=_join_key)[:p.pop_size]
        record(gen)
        if pop[0].full_length < best.full_length:
            best = pop[0]
            stall = 0
        else:
            stall += 1
    return SearchResult(best.tree, best.schedule, trace)


def trace_csv(trace):
    lines = ["generation,best_L,mean_L,elapsed_ms"]
    lines += [f"{r.generation},{r.best_L},{r.mean_L:.4f},{r.elapsed_ms:.3f}" for r in trace]
    return "\n".join(lines) + "\n"
