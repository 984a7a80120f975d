"""Rooted aggregation trees and the structural moves applied to them."""

from __future__ import annotations

from bisect import insort

from .errors import FeasibilityError, PreconditionError, MlasError


class AggTree:
    """Spanning tree of an instance rooted at its sink.

    ``parent[root]`` is -1. Children lists are kept sorted by vertex id.
    Public move functions return new trees; the ``_move``/``_invert``
    methods mutate in place and are meant for local search loops that own
    their copy.
    """

    __slots__ = ("inst", "root", "parent", "children")

    def __init__(self, inst, parent):
        self.inst = inst
        self.root = inst.sink
        self.parent = list(parent)
        self.children = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if p >= 0:
                self.children[p].append(v)

    @classmethod
    def _raw(cls, inst, parent, children):
        t = cls.__new__(cls)
        t.inst = inst
        t.root = inst.sink
        t.parent = parent
        t.children = children
        return t

    def copy(self):
        return AggTree._raw(self.inst, list(self.parent), [list(c) for c in self.children])

    @property
    def n(self):
        return len(self.parent)

    def key(self):
        return tuple(self.parent)

    def __eq__(self, other):
        return isinstance(other, AggTree) and self.inst is other.inst and self.parent == other.parent

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"AggTree(root={self.root}, parent={self.parent})"

    def degree(self, v):
        return len(self.children[v]) + (0 if v == self.root else 1)

    def depth(self):
        depth = [0] * self.n
        for v in self.preorder():
            if v != self.root:
                depth[v] = depth[self.parent[v]] + 1
        return depth

    def preorder(self):
        order, stack = [], [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
        return order

    def subtree(self, v):
        out, stack = [], [v]
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(self.children[x])
        return out

    def is_descendant(self, a, b):
        x = a
        while x >= 0:
            if x == b:
                return True
            x = self.parent[x]
        return False

    def validate(self):
        """Raise MlasError unless the tree spans its instance correctly."""
        inst = self.inst
        if len(self.parent) != inst.n:
            raise MlasError(f"tree has {len(self.parent)} vertices, instance has {inst.n}")
        if self.parent[self.root] != -1:
            raise MlasError("root has a parent")
        for v, p in enumerate(self.parent):
            if v == self.root:
                continue
            if p < 0:
                raise MlasError(f"vertex {v} has no parent")
            if not inst.has_edge(v, p):
                raise MlasError(f"arc ({v}, {p}) is not an edge")
            if v not in self.children[p]:
                raise MlasError(f"children of {p} miss {v}")
        for p, ch in enumerate(self.children):
            if ch != sorted(ch) or any(self.parent[c] != p for c in ch):
                raise MlasError(f"children list of {p} inconsistent")
        if len(self.subtree(self.root)) != inst.n:
            raise MlasError("tree contains a cycle or is not spanning")

    # in-place moves

    def _move(self, v, u):
        p = self.parent[v]
        self.children[p].remove(v)
        insort(self.children[u], v)
        self.parent[v] = u

    def _invert(self, v, u):
        p = self.parent[v]
        self._move(p, v)
        self.children[p].remove(v)
        insort(self.children[u], v)
        self.parent[v] = u


def is_descendant(t, a, b):
    """True iff ``a`` lies in the subtree rooted at ``b`` (reflexive)."""
    return t.is_descendant(a, b)


def _check_arc(t, v, u):
    if v == t.root:
        raise FeasibilityError("the sink never sends")
    if u == v or not t.inst.has_edge(v, u):
        raise FeasibilityError(f"({v}, {u}) is not an arc of the instance")


def reattach(t, v, new_parent):
    _check_arc(t, v, new_parent)
    if t.is_descendant(new_parent, v):
        raise FeasibilityError(f"{new_parent} lies in the subtree of {v}")
    out = t.copy()
    if out.parent[v] != new_parent:
        out._move(v, new_parent)
    return out


def invert_and_reattach(t, v, p_star):
    """Make v's parent p a child of v, then hang v below ``p_star``.

    ``p_star`` must lie outside the subtree of p, since after the inversion
    every vertex of that subtree belongs to v's component.
    """
    if v == t.root:
        raise PreconditionError("cannot invert at the root")
    p = t.parent[v]
    if p == t.root:
        raise PreconditionError(f"{v} is a child of the root")
    _check_arc(t, v, p_star)
    if t.is_descendant(p_star, p):
        raise FeasibilityError(f"{p_star} lies in the subtree of {p}")
    out = t.copy()
    out._invert(v, p_star)
    return out


def tree_distance(a, b):
    """Number of non-root vertices whose parents differ."""
    if a.inst is not b.inst:
        raise MlasError("trees span different instances")
    return sum(1 for pa, pb in zip(a.parent, b.parent) if pa != pb)
