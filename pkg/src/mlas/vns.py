"""Variable neighborhood search over aggregation trees."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import NamedTuple

from .builders import mlst, round_heuristic, spt
from .gls import SearchResult, shake
from .latency import arc_inversion_ls, branch_reattaching_ls
from .scheduler import ndr_schedule

DESCENT = (branch_reattaching_ls, arc_inversion_ls)


@dataclass
class VnsParams:
    k_max: int = 30
    stall_limit: int = 3
    seed: int | None = None

    def __post_init__(self):
        if self.k_max < 1:
            raise ValueError("k_max must be at least 1")
        if self.stall_limit < 1:
            raise ValueError("stall_limit must be at least 1")


class VnsTraceRow(NamedTuple):
    outer_iteration: int
    K: int
    current_L: int
    best_L: int
    elapsed_ms: float


def starting_solution(inst):
    """Best of the MLST, round-heuristic and shortest-path trees after scheduling."""
    best = None
    for build in (mlst, round_heuristic, spt):
        t, s = ndr_schedule(inst, build(inst))
        if best is None or s.length < best[1].length:
            best = (t, s)
    return best


def descend(inst, t, s):
    """Cycle through the local searches, restarting from the first after
    every improvement of the scheduled length."""
    l = 0
    while l < len(DESCENT):
        t2, s2 = ndr_schedule(inst, DESCENT[l](t))
        if s2.length < s.length:
            t, s = t2, s2
            l = 0
        else:
            l += 1
    return t, s


def run_vns(inst, p=None, rng=None):
    p = p or VnsParams()
    rng = rng if rng is not None else random.Random(p.seed)
    start = time.perf_counter()
    t, s = starting_solution(inst)
    trace = []
    outer = stall = 0
    while stall < p.stall_limit:
        outer += 1
        before = s.length
        k = 0
        while k <= p.k_max:
            t1, s1 = ndr_schedule(inst, shake(t, k, rng))
            t1, s1 = descend(inst, t1, s1)
            improved = s1.length < s.length
            if improved:
                t, s = t1, s1
            trace.append(VnsTraceRow(outer, k, s1.length, s.length,
                                     (time.perf_counter() - start) * 1000.0))
            k = 1 if improved else k + 1
        stall = 0 if s.length < before else stall + 1
    return SearchResult(t, s, trace)


def trace_csv(trace):
    lines = ["outer_iteration,K,current_L,best_L,elapsed_ms"]
    lines += [f"{r.outer_iteration},{r.K},{r.current_L},{r.best_L},{r.elapsed_ms:.3f}" for r in trace]
    return "\n".join(lines) + "\n"
