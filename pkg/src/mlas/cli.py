"""Command line entry point: ``mlas {gen,solve,exact,render,bench}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .exact import exact_min_latency
from .instance import build_instance, load_orlib_case, load_points
from .scheduler import schedule_to_json


def _params(pairs):
    out = {}
    for item in pairs or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise SystemExit(f"--params expects key=value, got {item!r}")
        out[key.strip()] = val.strip()
    return out


def _instance(args):
    with open(args.instance) as fh:
        if args.case is not None:
            ps = load_orlib_case(fh, args.case, Path(args.instance).stem)
        else:
            ps = load_points(fh, args.format, Path(args.instance).stem)
    return build_instance(ps, args.d)


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _split_params(algo, params):
    if algo in ("GLS1", "GLS2"):
        return params, {}
    if algo == "VNS":
        return {}, params
    return {}, {}


def cmd_gen(args):
    inst = bench.generate_instance(args.n, args.d, args.seed)
    _emit(bench.write_orlib(inst.point_set), args.out)


def cmd_solve(args):
    inst = _instance(args)
    gls, vns = _split_params(args.algo, _params(args.params))
    tree, sched, secs = bench.solve(inst, args.algo, args.seed, gls, vns)
    bench.checked(inst, tree, sched, args.algo)
    if args.out:
        Path(args.out).write_text(schedule_to_json(sched) + "\n")
    print(f"{args.algo} L={sched.length}")


def cmd_exact(args):
    inst = _instance(args)
    length, tree, sched = exact_min_latency(inst, limit_n=args.limit)
    bench.checked(inst, tree, sched, "EXACT")
    if args.out:
        Path(args.out).write_text(schedule_to_json(sched) + "\n")
    print(f"EXACT L={length}")


def cmd_render(args):
    inst = _instance(args)
    gls, vns = _split_params(args.algo, _params(args.params))
    tree, sched, _ = bench.solve(inst, args.algo, args.seed, gls, vns)
    _emit(bench.export_dot(inst, tree, sched), args.out)


def cmd_bench(args):
    config = bench.load_config(Path(args.config))
    if args.reps is not None:
        config.reps = args.reps
    if args.seed is not None:
        config.seed = args.seed
    if args.no_timing:
        config.timing = False
    reports = bench.run_matrix(config)
    _emit(bench.summary_csv(reports), args.out)
    if args.raw:
        Path(args.raw).write_text(bench.raw_csv(reports))


def build_parser():
    ap = argparse.ArgumentParser(prog="mlas", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def instance_args(p):
        p.add_argument("--instance", required=True, help="point file")
        p.add_argument("--format", choices=("orlib", "csv"), default="orlib")
        p.add_argument("--case", type=int, help="problem number in a multi-problem OR-Library file")
        p.add_argument("--d", type=float, required=True, help="critical distance")

    p = sub.add_parser("gen", help="write a random connected instance in OR-Library format")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    for name, func, helptext in (("solve", cmd_solve, "run one algorithm on one instance"),
                                 ("render", cmd_render, "DOT drawing of a solution")):
        p = sub.add_parser(name, help=helptext)
        instance_args(p)
        p.add_argument("--algo", choices=bench.ALGORITHMS, default="VNS")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--params", nargs="*", metavar="KEY=VALUE")
        p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("exact", help="exact minimum latency (small instances)")
    instance_args(p)
    p.add_argument("--limit", type=int, default=12)
    p.add_argument("--out")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bench", help="run an experiment matrix from a config file")
    p.add_argument("config")
    p.add_argument("--out", help="summary CSV (stdout when omitted)")
    p.add_argument("--raw", help="per-run CSV")
    p.add_argument("--reps", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--no-timing", action="store_true", help="write 0 for times so output is byte-stable")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    args.func(args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
