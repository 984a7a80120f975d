"""Exact minimum latency for small instances.

The search runs slot by slot over the set of vertices that have already
sent. Which vertex received what does not matter for the future, only who
is still able to receive, so two partial schedules with the same sent set
are interchangeable and the first (earliest) one reached dominates. A
vertex picks its recipient when it sends, which means trees and schedules
are searched together.
"""

from __future__ import annotations

from itertools import product

from .errors import ResourceError, SizeError
from .scheduler import FullSchedule
from .tree import AggTree


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _hop_bound(sink, nbmask, alive):
    """Largest hop distance to the sink inside ``alive``; None if some
    alive vertex is cut off."""
    seen = 1 << sink
    frontier = seen
    dist = 0
    while True:
        nxt = 0
        for v in _bits(frontier):
            nxt |= nbmask[v]
        nxt &= alive & ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
        dist += 1
    if alive & ~seen:
        return None
    return dist


def _transitions(cands, unsent, nbmask, closed):
    """Every non-empty conflict-free sender set from ``cands``, with one
    recipient assignment each."""
    found = {}

    def rec(i, heard, listen, senders, pairs):
        if senders and senders not in found:
            found[senders] = pairs
        for j in range(i, len(cands)):
            x = cands[j]
            if listen >> x & 1:
                continue
            for r in _bits(nbmask[x] & unsent & ~heard):
                rec(j + 1, heard | closed[x], listen | closed[r],
                    senders | (1 << x), pairs + ((x, r),))

    rec(0, 0, 0, 0, ())
    return found


def exact_min_latency(inst, limit_n=12, upper=None, state_budget=2_000_000):
    """Minimum schedule length over all trees and conflict-free schedules.

    Returns ``(L, tree, schedule)``. ``upper`` is an optional known
    achievable length used to prune; states whose hop bound exceeds it are
    never expanded.
    """
    n, sink = inst.n, inst.sink
    if n > limit_n:
        raise SizeError(f"exact search limited to n <= {limit_n}, got {n}")
    if n == 1:
        return 0, AggTree(inst, [-1]), FullSchedule([0], [-1], 0)
    nbmask = [sum(1 << u for u in inst.adjacency[v]) for v in range(n)]
    closed = [m | (1 << v) for v, m in enumerate(nbmask)]
    everyone = (1 << n) - 1
    goal = everyone & ~(1 << sink)
    if upper is None:
        upper = n - 1
    back = {0: None}
    layer = [0]
    t = 0
    while layer:
        t += 1
        nxt = []
        for sent in layer:
            unsent = everyone & ~sent
            cands = [v for v in _bits(goal & ~sent)]
            for senders, pairs in _transitions(cands, unsent, nbmask, closed).items():
                new = sent | senders
                if new in back:
                    continue
                bound = _hop_bound(sink, nbmask, everyone & ~new)
                if bound is None or t + bound > upper:
                    continue
                back[new] = (sent, pairs)
                if new == goal:
                    return _witness(inst, back, goal, t)
                nxt.append(new)
                if len(back) > state_budget:
                    raise ResourceError(f"exact search exceeded {state_budget} states")
        layer = nxt
    raise ResourceError(f"no schedule of length <= {upper} exists")


def _witness(inst, back, goal, length):
    n = inst.n
    parent = [-1] * n
    slot = [0] * n
    state, t = goal, length
    while back[state] is not None:
        prev, pairs = back[state]
        for x, r in pairs:
            parent[x] = r
            slot[x] = t
        state, t = prev, t - 1
    tree = AggTree(inst, parent)
    return length, tree, FullSchedule(slot, list(parent), length)


def exact_min_primary_latency(t, limit_n=10):
    """Brute-force minimum makespan of a fixed tree when only siblings
    conflict. Enumerates every set of ready vertices with distinct parents
    per slot."""
    n, root = t.n, t.root
    if n > limit_n:
        raise SizeError(f"brute force limited to n <= {limit_n}, got {n}")
    goal = ((1 << n) - 1) & ~(1 << root)
    if not goal:
        return 0
    child_mask = [sum(1 << c for c in t.children[v]) for v in range(n)]
    layer, seen, step = {0}, {0}, 0
    while layer:
        step += 1
        nxt = set()
        for sent in layer:
            groups = {}
            for v in range(n):
                if v != root and not sent >> v & 1 and child_mask[v] & ~sent == 0:
                    groups.setdefault(t.parent[v], []).append(v)
            for pick in product(*[[None] + g for g in groups.values()]):
                new = sent
                for v in pick:
                    if v is not None:
                        new |= 1 << v
                if new == sent or new in seen:
                    continue
                if new == goal:
                    return step
                seen.add(new)
                nxt.add(new)
        layer = nxt
    raise AssertionError("unreachable")  # pragma: no cover
