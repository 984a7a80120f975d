"""Aggregation latency when only primary conflicts count.

Under primary conflicts alone the optimal latency of a fixed tree follows
a simple recursion: a vertex whose children finish at f(c_1) >= f(c_2) >= ...
finishes receiving at ``max_i f(c_i) + i``. Everything here builds on that
value, including the incremental evaluators used by the local searches,
which only recompute the two root paths a move disturbs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FeasibilityError, PreconditionError


def gather_time(values):
    """Earliest time a receiver holds all data from children finishing at ``values``."""
    best = 0
    for i, x in enumerate(sorted(values, reverse=True), 1):
        if x + i > best:
            best = x + i
    return best


@dataclass
class PrimarySchedule:
    """Completion values ``f``, per-vertex send slots (0 for the root) and
    the makespan. ``depth``, ``tin`` and ``size`` index the tree the schedule
    was computed on, for O(1) ancestor queries."""

    f: list
    send_slot: list
    makespan: int
    depth: list
    tin: list
    size: list

    def in_subtree(self, a, b):
        """True iff ``a`` is in the subtree rooted at ``b``."""
        return self.tin[b] <= self.tin[a] < self.tin[b] + self.size[b]


def primary_schedule(t):
    n, root = t.n, t.root
    parent, children = t.parent, t.children
    order = t.preorder()
    tin = [0] * n
    depth = [0] * n
    for i, v in enumerate(order):
        tin[v] = i
        if v != root:
            depth[v] = depth[parent[v]] + 1
    f = [0] * n
    size = [1] * n
    for v in reversed(order):
        ch = children[v]
        if ch:
            f[v] = gather_time([f[c] for c in ch])
            size[v] += sum(size[c] for c in ch)
    slot = [0] * n
    for v in order:
        ch = children[v]
        if not ch:
            continue
        used = set()
        for c in sorted(ch, key=lambda c: (-f[c], c)):
            s = f[c] + 1
            while s in used:
                s += 1
            used.add(s)
            slot[c] = s
    return PrimarySchedule(f=f, send_slot=slot, makespan=f[root], depth=depth, tin=tin, size=size)


def _lca(parent, depth, a, b):
    while depth[a] > depth[b]:
        a = parent[a]
    while depth[b] > depth[a]:
        b = parent[b]
    while a != b:
        a = parent[a]
        b = parent[b]
    return a


def _climb(parent, children, f, x, val, stop):
    """Propagate a new value at ``x`` upward until the child of ``stop``.

    Returns ``(top, top_value, touched)``. Stops recomputing once a value
    matches the old one, since nothing above can change after that.
    """
    touched = 0
    while parent[x] != stop and val != f[x]:
        child, x = x, parent[x]
        val = gather_time([val if c == child else f[c] for c in children[x]])
        touched += 1
    if val == f[x]:
        while parent[x] != stop:
            x = parent[x]
        val = f[x]
    return x, val, touched


def _move_effect(t, ps, cut, target, value, early_exit=False):
    """Latency change when the subtree at ``cut`` is detached and a subtree
    finishing at ``value`` is hung below ``target``.

    Returns ``(L(T) - L(T'), touched)`` where ``touched`` counts recomputed
    vertices. With ``early_exit`` a zero is returned as soon as the detach
    branch is seen not to speed up, because no such move can improve.
    """
    parent, children, f = t.parent, t.children, ps.f
    a = parent[cut]
    s = _lca(parent, ps.depth, a, target)
    touched = 0

    q = q_val = None
    if a != s:
        val = gather_time([f[c] for c in children[a] if c != cut])
        q, q_val, k = _climb(parent, children, f, a, val, s)
        touched += 1 + k
        if early_exit and q_val >= f[q]:
            return 0, touched

    r = r_val = None
    if target != s:
        val = gather_time([f[c] for c in children[target]] + [value])
        r, r_val, k = _climb(parent, children, f, target, val, s)
        touched += 1 + k

    vals = []
    for c in children[s]:
        if c == q:
            vals.append(q_val)
        elif c == r:
            vals.append(r_val)
        elif c != cut:
            vals.append(f[c])
    if target == s:
        vals.append(value)
    val = gather_time(vals)
    touched += 1
    x = s
    while val != f[x] and parent[x] >= 0:
        child, x = x, parent[x]
        val = gather_time([val if c == child else f[c] for c in children[x]])
        touched += 1
    if val == f[x]:
        return 0, touched
    return f[x] - val, touched


def _check_reattach(t, ps, v, u):
    if v == t.root:
        raise FeasibilityError("the sink never sends")
    if u == v or not t.inst.has_edge(v, u):
        raise FeasibilityError(f"({v}, {u}) is not an arc of the instance")
    if ps.in_subtree(u, v):
        raise FeasibilityError(f"{u} lies in the subtree of {v}")


def reattaching_effect(t, ps, v, u, early_exit=False):
    """L(T) - L(T') for moving v below u; positive means shorter.

    ``early_exit`` returns 0 for any move that cannot improve, so only
    positive answers are exact in that mode.
    """
    _check_reattach(t, ps, v, u)
    if t.parent[v] == u:
        return 0
    return _move_effect(t, ps, v, u, ps.f[v], early_exit)[0]


def _inversion_values(t, ps, v):
    p = t.parent[v]
    f = ps.f
    fp = gather_time([f[c] for c in t.children[p] if c != v])
    fv = gather_time([f[c] for c in t.children[v]] + [fp])
    return p, fv


def _check_inversion(t, ps, v, u):
    if v == t.root:
        raise PreconditionError("cannot invert at the root")
    p = t.parent[v]
    if p == t.root:
        raise PreconditionError(f"{v} is a child of the root")
    if u == v or not t.inst.has_edge(v, u):
        raise FeasibilityError(f"({v}, {u}) is not an arc of the instance")
    if ps.in_subtree(u, p):
        raise FeasibilityError(f"{u} lies in the subtree of {p}")


def arc_inversion_effect(t, ps, v, u, early_exit=False):
    """L(T) - L(T') for ``invert_and_reattach(t, v, u)``."""
    _check_inversion(t, ps, v, u)
    p, fv = _inversion_values(t, ps, v)
    return _move_effect(t, ps, p, u, fv, early_exit)[0]


def _cut_improves(t, ps, x):
    """Whether dropping the subtree of ``x`` would shorten the tree at all.

    A move that detaches ``x`` somewhere can only improve when this holds,
    since re-hanging the subtree never lowers any completion value.
    """
    parent, children, f = t.parent, t.children, ps.f
    a = parent[x]
    val = gather_time([f[c] for c in children[a] if c != x])
    while val != f[a] and parent[a] >= 0:
        child, a = a, parent[a]
        val = gather_time([val if c == child else f[c] for c in children[a]])
    return val != f[a]


def branch_reattaching_ls(t):
    """Best-improvement descent over single-vertex reattachments."""
    t = t.copy()
    adjacency, root = t.inst.adjacency, t.root
    while True:
        ps = primary_schedule(t)
        best, move = 0, None
        for v in range(t.n):
            if v == root or not _cut_improves(t, ps, v):
                continue
            p = t.parent[v]
            for u in adjacency[v]:
                if u == p or ps.in_subtree(u, v):
                    continue
                e = _move_effect(t, ps, v, u, ps.f[v], early_exit=True)[0]
                if e > best:
                    best, move = e, (v, u)
        if move is None:
            return t
        t._move(*move)


def arc_inversion_ls(t):
    """Descent over arc inversions; every vertex below the root's children
    takes its best improving inversion in turn, until a full sweep makes no
    change."""
    t = t.copy()
    adjacency, root = t.inst.adjacency, t.root
    ps = primary_schedule(t)
    improved = True
    while improved:
        improved = False
        for v in range(t.n):
            p = t.parent[v]
            if v == root or p == root or not _cut_improves(t, ps, p):
                continue
            _, fv = _inversion_values(t, ps, v)
            best, p_star = 0, None
            for u in adjacency[v]:
                if u == p or ps.in_subtree(u, p):
                    continue
                e = _move_effect(t, ps, p, u, fv, early_exit=True)[0]
                if e > best:
                    best, p_star = e, u
            if p_star is not None:
                t._invert(v, p_star)
                ps = primary_schedule(t)
                improved = True
    return t
