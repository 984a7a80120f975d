"""Conflict-free schedules under the protocol interference model."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .tree import AggTree


@dataclass
class FullSchedule:
    """``send_slot[v]`` and ``recipient[v]`` for every vertex; the sink has
    slot 0 and recipient -1."""

    send_slot: list
    recipient: list
    length: int

    def senders_by_slot(self):
        slots = {}
        for v, s in enumerate(self.send_slot):
            if self.recipient[v] >= 0:
                slots.setdefault(s, []).append(v)
        return slots

    def to_records(self):
        return [
            {"vertex": v, "parent": int(p), "slot": int(s)}
            for v, (p, s) in enumerate(zip(self.recipient, self.send_slot))
            if p >= 0
        ]


def schedule_to_json(s):
    return json.dumps(s.to_records(), indent=1)


def schedule_from_json(text, n):
    slot, rec = [0] * n, [-1] * n
    for r in json.loads(text):
        slot[r["vertex"]] = r["slot"]
        rec[r["vertex"]] = r["parent"]
    return FullSchedule(slot, rec, max(slot, default=0))


@dataclass(frozen=True)
class Violation:
    rule: str
    slot: int
    vertices: tuple

    def __str__(self):
        return f"{self.rule} at slot {self.slot}: {self.vertices}"


def validate_schedule(inst, t, s):
    """Every way ``s`` breaks the model on tree ``t``; empty when valid."""
    out = []
    sink = inst.sink
    n = inst.n
    if len(s.send_slot) != n or len(s.recipient) != n:
        return [Violation("shape", 0, (len(s.send_slot), n))]
    if s.recipient[sink] != -1:
        out.append(Violation("sink sends", s.send_slot[sink], (sink,)))
    for v in range(n):
        if v == sink:
            continue
        p, sl = s.recipient[v], s.send_slot[v]
        if p < 0 or sl < 1:
            out.append(Violation("missing send", sl, (v,)))
            continue
        if p != t.parent[v]:
            out.append(Violation("recipient", sl, (v, p, t.parent[v])))
        if not inst.has_edge(v, p):
            out.append(Violation("not an edge", sl, (v, p)))
        if p != sink and 0 < s.send_slot[p] <= sl:
            out.append(Violation("ordering", sl, (v, p)))
    if s.length != max((s.send_slot[v] for v in range(n) if v != sink), default=0):
        out.append(Violation("length", s.length, ()))
    nb = inst.neighbor_sets
    for sl, senders in sorted(s.senders_by_slot().items()):
        for i, a in enumerate(senders):
            pa = s.recipient[a]
            for b in senders[i + 1:]:
                pb = s.recipient[b]
                if a == pb or b == pa:
                    out.append(Violation("half-duplex", sl, (a, b)))
                elif b in nb[pa] or a in nb[pb]:
                    out.append(Violation("receiver conflict", sl, (a, b)))
    return out


def ndr_schedule(inst, t):
    """Greedy slot packing ranked by neighbor degree.

    At every slot the ready vertices (all children already sent) are tried
    in order of descending graph degree, then id, and admitted when they
    conflict with nobody admitted so far. A ready vertex that cannot send to
    its own parent may instead send to another unsent neighbor no farther
    from the sink, if that transmission fits; the returned tree reflects
    such changes.
    """
    n, sink = inst.n, inst.sink
    adjacency, level = inst.adjacency, inst.level
    parent = list(t.parent)
    waiting = [len(c) for c in t.children]
    sent = [False] * n
    sent[sink] = True
    slot = [0] * n
    rank = sorted(range(n), key=lambda v: (-len(adjacency[v]), v))
    pos = {v: i for i, v in enumerate(rank)}
    ready = sorted((v for v in range(n) if v != sink and waiting[v] == 0), key=pos.__getitem__)
    remaining = n - 1
    cur = 0
    while remaining:
        cur += 1
        heard = set()      # vertices within range of an active sender
        listening = set()  # vertices within range of an active receiver
        admitted = []
        deferred = []
        for v in ready:
            p = parent[v]
            if p in heard or v in listening:
                deferred.append(v)
                continue
            _admit(v, p, adjacency, heard, listening, admitted)
        still = []
        freed = []
        for v in deferred:
            if v in listening:
                still.append(v)
                continue
            old = parent[v]
            cap = level[old]
            alt = [u for u in adjacency[v]
                   if u != old and not sent[u] and level[u] <= cap and u not in heard]
            if not alt:
                still.append(v)
                continue
            u = min(alt, key=lambda u: (level[u], u))
            waiting[old] -= 1
            freed.append(old)
            parent[v] = u
            waiting[u] += 1
            _admit(v, u, adjacency, heard, listening, admitted)
        for v in admitted:
            sent[v] = True
            slot[v] = cur
            remaining -= 1
        nxt = set(still)
        for v in admitted:
            p = parent[v]
            waiting[p] -= 1
            freed.append(p)
        for p in freed:
            if waiting[p] == 0 and not sent[p]:
                nxt.add(p)
        ready = sorted(nxt, key=pos.__getitem__)
    recipient = list(parent)
    return AggTree(inst, parent), FullSchedule(slot, recipient, cur)


def _admit(v, p, adjacency, heard, listening, admitted):
    admitted.append(v)
    heard.add(v)
    heard.update(adjacency[v])
    listening.add(p)
    listening.update(adjacency[p])
