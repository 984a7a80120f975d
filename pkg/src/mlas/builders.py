"""Constructive aggregation-tree heuristics."""

from __future__ import annotations

from .tree import AggTree


def spt(inst):
    """Shortest-path tree: each vertex hangs below its lowest-id neighbor one hop closer."""
    level = inst.level
    parent = [-1] * inst.n
    for v in range(inst.n):
        if v != inst.sink:
            parent[v] = next(u for u in inst.adjacency[v] if level[u] == level[v] - 1)
    return AggTree(inst, parent)


def random_shortest_path(inst, rng):
    level = inst.level
    parent = [-1] * inst.n
    for v in range(inst.n):
        if v != inst.sink:
            parent[v] = rng.choice([u for u in inst.adjacency[v] if level[u] == level[v] - 1])
    return AggTree(inst, parent)


def weighted_index(weights, rng):
    """Index drawn with probability proportional to ``weights``."""
    x = rng.random() * sum(weights)
    acc = 0.0
    for i, w in enumerate(weights):
        acc += w
        if x < acc:
            return i
    return len(weights) - 1


def sample_frontier_arc(frontier, tree_degree, rng):
    """Pick one ``(u, v)`` from ``frontier`` with probability proportional to
    ``1 / max(1, tree_degree[u])``."""
    weights = [1.0 / max(1, tree_degree[u]) for u, _ in frontier]
    return frontier[weighted_index(weights, rng)]


def random_min_degree(inst, rng):
    """Grow a tree from the sink, preferring attachment points of low tree degree.

    Every frontier arc ``(u, v)`` is weighted by ``1 / deg_T(u)``; the draw is
    done in two stages (tree vertex by its summed arc weight, then one of its
    outside neighbors uniformly) which gives the same distribution.
    """
    n, sink = inst.n, inst.sink
    adjacency = inst.adjacency
    parent = [-1] * n
    in_tree = [False] * n
    in_tree[sink] = True
    tree_deg = [0] * n
    outside = [0] * n  # neighbors of u not yet in the tree
    members = [sink]
    for v in adjacency[sink]:
        outside[sink] += 1
    for _ in range(n - 1):
        weights = [outside[u] / max(1, tree_deg[u]) for u in members]
        u = members[weighted_index(weights, rng)]
        v = rng.choice([w for w in adjacency[u] if not in_tree[w]])
        parent[v] = u
        in_tree[v] = True
        tree_deg[u] += 1
        tree_deg[v] = 1
        members.append(v)
        for w in adjacency[v]:
            if in_tree[w]:
                outside[w] -= 1
            else:
                outside[v] += 1
    return AggTree(inst, parent)


def round_heuristic(inst):
    """Round-based reverse broadcast.

    In every round each informed vertex adopts at most one uninformed
    neighbor. Uninformed vertices with the fewest informed neighbors choose
    first, each taking the free informed neighbor with fewest children.
    Vertices adopted in a round only start adopting in the next one.
    """
    n, sink = inst.n, inst.sink
    adjacency = inst.adjacency
    parent = [-1] * n
    informed = [False] * n
    informed[sink] = True
    n_children = [0] * n
    remaining = n - 1
    while remaining:
        cand = []
        for v in range(n):
            if informed[v]:
                continue
            k = sum(1 for u in adjacency[v] if informed[u])
            if k:
                cand.append((k, v))
        cand.sort()
        busy = set()
        adopted = []
        for _, v in cand:
            options = [u for u in adjacency[v] if informed[u] and u not in busy]
            if not options:
                continue
            u = min(options, key=lambda u: (n_children[u], u))
            parent[v] = u
            n_children[u] += 1
            busy.add(u)
            adopted.append(v)
        for v in adopted:
            informed[v] = True
        remaining -= len(adopted)
    return AggTree(inst, parent)


def cheapest_arc(members, adjacency, in_tree, depth, n_children):
    """Frontier arc ``(v, u)`` minimizing depth[u] + n_children[u], ties by ids."""
    best = None
    for u in members:
        cost = depth[u] + n_children[u]
        for v in adjacency[u]:
            if not in_tree[v]:
                key = (cost, v, u)
                if best is None or key < best:
                    best = key
    return best[1], best[2]


def mlst(inst):
    """Greedy tree growth minimizing receiver depth plus its current child count."""
    n, sink = inst.n, inst.sink
    adjacency = inst.adjacency
    parent = [-1] * n
    in_tree = [False] * n
    in_tree[sink] = True
    depth = [0] * n
    n_children = [0] * n
    members = [sink]
    for _ in range(n - 1):
        v, u = cheapest_arc(members, adjacency, in_tree, depth, n_children)
        parent[v] = u
        in_tree[v] = True
        depth[v] = depth[u] + 1
        n_children[u] += 1
        members.append(v)
    return AggTree(inst, parent)


HEURISTIC_TREES = {"H1": mlst, "H2": round_heuristic, "H3": spt}
