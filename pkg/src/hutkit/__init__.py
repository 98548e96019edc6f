"""Exact solvers, reductions and oracles for L-infinity Hausdorff distance
under translation."""

from .core import (
    Box,
    NEG_INF,
    POS_INF,
    Point,
    PointSet,
    box_contains,
    box_intersect,
    format_scalar,
    linf_distance,
    minkowski_cube,
    parse_scalar,
)
from .continuous import (
    FeasibleTranslation,
    candidate_deltas,
    decide,
    decide_2d,
    decide_3d_lopsided,
    optimize,
)
from .depth import DepthSweepTree, max_depth_2d
from .discrete import solve_discrete, solve_discrete_1d_scan
from .envelope import PiecewiseLinearFn, envelope_1d, solve_1d_opt
from .hausdorff import (
    HutInstance,
    directed_hausdorff,
    directed_hausdorff_fast,
    undirected_hausdorff,
)
from .rangetree import RangeTree, rt_build, rt_query_witness
from .unionops import complement_decompose, depth_at, union_cube_vertices_3d

__all__ = [
    "Box",
    "DepthSweepTree",
    "FeasibleTranslation",
    "HutInstance",
    "NEG_INF",
    "POS_INF",
    "PiecewiseLinearFn",
    "Point",
    "PointSet",
    "RangeTree",
    "box_contains",
    "box_intersect",
    "candidate_deltas",
    "complement_decompose",
    "decide",
    "decide_2d",
    "decide_3d_lopsided",
    "depth_at",
    "directed_hausdorff",
    "directed_hausdorff_fast",
    "envelope_1d",
    "format_scalar",
    "linf_distance",
    "max_depth_2d",
    "minkowski_cube",
    "optimize",
    "parse_scalar",
    "rt_build",
    "rt_query_witness",
    "solve_1d_opt",
    "solve_discrete",
    "solve_discrete_1d_scan",
    "undirected_hausdorff",
    "union_cube_vertices_3d",
]
