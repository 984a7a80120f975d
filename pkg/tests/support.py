"""Shared builders and brute-force oracles for the test suite."""


import networkx as nx
import numpy as np

from mlas.bench import generate_instance
from mlas.instance import PointSet, from_graph
from mlas.tree import AggTree


def graph_instance(n, edges, sink=0):
    """Instance over an explicit edge list; coordinates are placeholders."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    pts = np.array([[(i + 1) / (n + 1), 0.5] for i in range(n)])
    return from_graph(PointSet(pts, "graph"), 1.0, [sorted(a) for a in adj], sink)


def star_instance(leaves):
    return graph_instance(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path_instance(n):
    """Path 0-1-...-(n-1) with the sink at vertex 0."""
    return graph_instance(n, [(i, i + 1) for i in range(n - 1)])


def tree_from_parents(inst, parent):
    return AggTree(inst, parent)


def random_instance(rng, n_range=(5, 50), d_range=(0.2, 0.5)):
    while True:
        n = rng.randint(*n_range)
        d = rng.uniform(*d_range)
        try:
            return generate_instance(n, round(d, 3), rng.randrange(10**9), attempts=50)
        except Exception:
            continue


def random_tree(inst, rng):
    """Uniform-ish random spanning tree: random-weight spanning tree of the graph."""
    g = nx.Graph()
    g.add_nodes_from(range(inst.n))
    for u, v in inst.edges():
        g.add_edge(u, v, weight=rng.random())
    t = nx.minimum_spanning_tree(g)
    parent = [-1] * inst.n
    for a, b in nx.bfs_edges(t, inst.sink):
        parent[b] = a
    return AggTree(inst, parent)


def all_trees(inst):
    """Every spanning tree of the instance graph, rooted at the sink."""
    g = nx.Graph()
    g.add_nodes_from(range(inst.n))
    g.add_edges_from(inst.edges())
    for t in nx.SpanningTreeIterator(g):
        parent = [-1] * inst.n
        for a, b in nx.bfs_edges(t, inst.sink):
            parent[b] = a
        yield AggTree(inst, parent)


def brute_primary_makespan(t):
    """Smallest L for which slots in 1..L exist with distinct sibling slots
    and every child before its parent; plain backtracking over slot values."""
    order = t.preorder()[1:]
    n = t.n
    for L in range(0, n):
        slot = [L + 1] * n  # root acts as sending after everyone

        def assign(i):
            if i == len(order):
                return True
            v = order[i]
            p = t.parent[v]
            taken = {slot[c] for c in t.children[p] if c in done}
            for s in range(1, slot[p]):
                if s in taken:
                    continue
                slot[v] = s
                done.add(v)
                if assign(i + 1):
                    return True
                done.discard(v)
            return False

        done = set()
        if assign(0):
            return L
    raise AssertionError("no schedule")


# acceptance outcomes, printed in the terminal summary by conftest.py
ACCEPTANCE = []


def record(criterion, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    ACCEPTANCE.append(line)
    print(line)
    return ok


def record_skip(criterion, detail):
    line = f"SKIP criterion {criterion}: {detail}"
    ACCEPTANCE.append(line)
    print(line)
