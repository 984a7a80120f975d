"""Minimum-latency conflict-free aggregation scheduling on unit disk graphs.

Tree builders, a primary-conflict latency engine with incremental move
evaluation, a protocol-model scheduler, genetic local search, variable
neighborhood search and an exact solver for small instances.
"""

from .builders import mlst, random_min_degree, random_shortest_path, round_heuristic, spt
from .exact import exact_min_latency, exact_min_primary_latency
from .gls import GlsParams, run_gls
from .instance import Instance, PointSet, build_instance, load_orlib_case, load_points, sink_of
from .latency import (
    arc_inversion_effect,
    arc_inversion_ls,
    branch_reattaching_ls,
    primary_schedule,
    reattaching_effect,
)
from .scheduler import FullSchedule, ndr_schedule, validate_schedule
from .tree import AggTree, invert_and_reattach, is_descendant, reattach, tree_distance
from .vns import VnsParams, run_vns

__all__ = [
    "AggTree", "FullSchedule", "GlsParams", "Instance", "PointSet", "VnsParams",
    "arc_inversion_effect", "arc_inversion_ls", "branch_reattaching_ls", "build_instance",
    "exact_min_latency", "exact_min_primary_latency", "invert_and_reattach", "is_descendant",
    "load_orlib_case", "load_points", "mlst", "ndr_schedule", "primary_schedule",
    "random_min_degree", "random_shortest_path", "reattach", "reattaching_effect",
    "round_heuristic", "run_gls", "run_vns", "sink_of", "spt", "tree_distance",
    "validate_schedule",
]
