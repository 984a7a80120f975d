"""Experiment harness: instance generation, algorithm runs, statistics,
CSV and DOT output."""

from __future__ import annotations

import configparser
import csv
import io
import random
import statistics
import time
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from .builders import HEURISTIC_TREES
from .errors import ConnectivityError, ValidationError
from .exact import exact_min_latency
from .gls import GlsParams, run_gls
from .instance import PointSet, build_instance, load_orlib_case, load_points
from .scheduler import ndr_schedule, schedule_to_json, validate_schedule
from .vns import VnsParams, run_vns

ALGORITHMS = ("H1", "H2", "H3", "GLS1", "GLS2", "VNS", "EXACT")
METAHEURISTICS = ("GLS1", "GLS2", "VNS")
SUMMARY_HEADER = ["instance_id", "algorithm", "runs", "sl_best", "sl_av", "sl_sd", "opt_pct", "time_av_s"]
RAW_HEADER = ["instance_id", "algorithm", "seed", "sl", "time_s"]

# one color per slot class, cycled
PALETTE = (
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
    "#f032e6", "#9a6324", "#008080", "#800000", "#808000", "#000075",
)


def generate_instance(n, d, seed, attempts=1000):
    """Uniform random points in the unit square, redrawn until the unit disk
    graph at distance ``d`` is connected."""
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = random.Random(seed)
    for _ in range(attempts):
        pts = np.array([[rng.random(), rng.random()] for _ in range(n)])
        if len(np.unique(pts, axis=0)) < n:
            continue
        try:
            return build_instance(PointSet(pts, f"gen-n{n}-d{d}-s{seed}"), d)
        except ConnectivityError:
            continue
    raise ConnectivityError(
        f"no connected unit disk graph with n={n}, d={d} in {attempts} draws; try a larger d")


def write_orlib(ps):
    lines = [str(len(ps))]
    lines += [f"{x!r} {y!r}" for x, y in ps.points.tolist()]
    return "\n".join(lines) + "\n"


def _coerce(params_cls, overrides):
    types = {f.name: f.type for f in fields(params_cls)}
    out = {}
    for key, val in overrides.items():
        if key not in types:
            raise KeyError(f"{params_cls.__name__} has no parameter {key!r}")
        if isinstance(val, str):
            kind = types[key]
            if val.lower() == "none":
                val = None
            elif "float" in str(kind):
                val = float(val)
            else:
                val = int(val)
        out[key] = val
    return out


def solve(inst, algo, seed=0, gls=None, vns=None, exact_limit=12):
    """Run one algorithm once. Returns ``(tree, schedule, seconds)``."""
    start = time.perf_counter()
    if algo in HEURISTIC_TREES:
        tree, sched = ndr_schedule(inst, HEURISTIC_TREES[algo](inst))
    elif algo in ("GLS1", "GLS2"):
        p = GlsParams(**{**_coerce(GlsParams, gls or {}), "seed": seed})
        ls = "arc_inversion" if algo == "GLS1" else "branch_reattaching"
        tree, sched, _ = run_gls(inst, p, ls)
    elif algo == "VNS":
        p = VnsParams(**{**_coerce(VnsParams, vns or {}), "seed": seed})
        tree, sched, _ = run_vns(inst, p)
    elif algo == "EXACT":
        _, tree, sched = exact_min_latency(inst, limit_n=exact_limit)
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    return tree, sched, time.perf_counter() - start


def checked(inst, tree, sched, label=""):
    bad = validate_schedule(inst, tree, sched)
    if bad:
        raise ValidationError(
            f"{label}: invalid schedule ({'; '.join(map(str, bad[:5]))})\n{schedule_to_json(sched)}", bad)
    return sched


@dataclass
class RawRun:
    seed: int
    sl: int
    time_s: float


@dataclass
class RunReport:
    instance_id: str
    algorithm: str
    raw: list = field(default_factory=list)
    opt: int | None = None

    @property
    def runs(self):
        return len(self.raw)

    @property
    def values(self):
        return [r.sl for r in self.raw]

    @property
    def sl_best(self):
        return min(self.values)

    @property
    def sl_av(self):
        return statistics.fmean(self.values)

    @property
    def sl_sd(self):
        return statistics.stdev(self.values) if self.runs > 1 else 0.0

    @property
    def opt_pct(self):
        if self.opt is None:
            return None
        return 100.0 * sum(v == self.opt for v in self.values) / self.runs

    @property
    def time_av_s(self):
        return statistics.fmean(r.time_s for r in self.raw)

    def row(self):
        opt = "" if self.opt_pct is None else f"{self.opt_pct:.2f}"
        return [self.instance_id, self.algorithm, self.runs, self.sl_best,
                f"{self.sl_av:.4f}", f"{self.sl_sd:.4f}", opt, f"{self.time_av_s:.4f}"]


@dataclass
class ExperimentConfig:
    """What to run. ``instances`` is a list of ``(instance_id, Instance)``."""

    instances: list
    algorithms: tuple = ALGORITHMS
    reps: int = 20
    seed: int = 0
    gls: dict = field(default_factory=dict)
    vns: dict = field(default_factory=dict)
    exact_limit: int = 10
    timing: bool = True


def _split(text):
    return [tok for tok in text.replace(",", " ").split() if tok]


def load_config(path_or_text, base_dir=None):
    """Parse an INI experiment file (see README for the keys)."""
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    text = path_or_text
    if isinstance(path_or_text, Path) or (isinstance(path_or_text, str) and "\n" not in path_or_text
                                          and Path(path_or_text).is_file()):
        path = Path(path_or_text)
        text = path.read_text()
        base_dir = base_dir or path.parent
    base_dir = Path(base_dir or ".")
    cp.read_string(text)
    exp = cp["experiment"] if cp.has_section("experiment") else {}
    algorithms = tuple(_split(exp.get("algorithms", " ".join(ALGORITHMS))))
    for a in algorithms:
        if a not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {a!r}")
    instances = []
    if cp.has_section("grid"):
        g = cp["grid"]
        cases = int(g.get("cases", "1"))
        first = int(g.get("first_seed", "1"))
        for n in _split(g["n"]):
            for d in _split(g["d"]):
                for c in range(first, first + cases):
                    inst = generate_instance(int(n), float(d), c)
                    instances.append((f"n{n}_d{d}_c{c}", inst))
    for name in cp.sections():
        if not name.startswith("file:"):
            continue
        sec = cp[name]
        p = base_dir / sec["path"]
        fmt = sec.get("format", "orlib")
        with open(p) as fh:
            if "case" in sec:
                ps = load_orlib_case(fh, int(sec["case"]), name[5:])
            else:
                ps = load_points(fh, fmt, name[5:])
        instances.append((name[5:], build_instance(ps, float(sec["d"]))))
    return ExperimentConfig(
        instances=instances,
        algorithms=algorithms,
        reps=int(exp.get("reps", "20")),
        seed=int(exp.get("seed", "0")),
        gls=dict(cp["gls"]) if cp.has_section("gls") else {},
        vns=dict(cp["vns"]) if cp.has_section("vns") else {},
        exact_limit=int(exp.get("exact_limit", "10")),
        timing=exp.get("timing", "true").lower() in ("1", "true", "yes", "on"),
    )


def run_matrix(config):
    """Run every algorithm on every instance. Heuristics and the exact
    solver run once, metaheuristics ``config.reps`` times with consecutive
    seeds. Every schedule is re-validated before it is counted."""
    reports = []
    for iid, inst in config.instances:
        opt = None
        rows = []
        for algo in config.algorithms:
            if algo == "EXACT" and inst.n > config.exact_limit:
                continue
            seeds = ([config.seed + r for r in range(config.reps)]
                     if algo in METAHEURISTICS else [config.seed])
            rep = RunReport(iid, algo)
            for s in seeds:
                tree, sched, secs = solve(inst, algo, s, config.gls, config.vns, config.exact_limit)
                checked(inst, tree, sched, f"{iid}/{algo}/seed={s}")
                rep.raw.append(RawRun(s, sched.length, secs if config.timing else 0.0))
            if algo == "EXACT":
                opt = rep.sl_best
            rows.append(rep)
        for rep in rows:
            rep.opt = opt
        reports.extend(rows)
    return reports


def summary_csv(reports):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SUMMARY_HEADER)
    for r in reports:
        w.writerow(r.row())
    return buf.getvalue()


def raw_csv(reports):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RAW_HEADER)
    for r in reports:
        for run in r.raw:
            w.writerow([r.instance_id, r.algorithm, run.seed, run.sl, f"{run.time_s:.4f}"])
    return buf.getvalue()


def slot_color(slot):
    return PALETTE[(slot - 1) % len(PALETTE)]


def export_dot(inst, t, s, scale=10.0):
    """DOT digraph of the tree; arcs carry their slot as label and color.
    Node positions pin the original coordinates (neato -n)."""
    checked(inst, t, s, "export_dot")
    out = ["digraph aggregation {",
           "  node [shape=circle, fontsize=10, width=0.3, fixedsize=true];",
           "  edge [fontsize=9];"]
    for v, (x, y) in enumerate(inst.points.tolist()):
        extra = ", style=filled, fillcolor=\"#cccccc\"" if v == inst.sink else ""
        out.append(f'  {v} [pos="{x * scale:.4f},{y * scale:.4f}!"{extra}];')
    for v in range(inst.n):
        if v == inst.sink:
            continue
        sl = s.send_slot[v]
        out.append(f'  {v} -> {s.recipient[v]} [label="{sl}", color="{slot_color(sl)}", '
                   f'fontcolor="{slot_color(sl)}"];')
    out.append("}")
    return "\n".join(out) + "\n"
