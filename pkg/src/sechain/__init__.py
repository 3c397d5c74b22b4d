"""Exact south-east chains, midpoint-set witnesses, and their graphs."""

from .construction import (
    EpsilonSearchError,
    Level,
    STEP_OFFSETS,
    StepOffsets,
    base_case,
    build,
    expected_witness_size,
    find_epsilon,
    step,
)
from .convex_subsets import CiResult, ci_bruteforce, ci_dp
from .document import ConstructionDoc, DocumentError
from .geometry import (
    Chain,
    Point,
    convex_hull,
    cross,
    flatten,
    is_convexly_independent,
    is_south_east_chain,
    midpoint,
    midpoint_set,
    minkowski_sum,
    pt,
    rotate60,
    slope,
    transform_chains,
    translate,
)
from .graphs import (
    BipartiteDrawing,
    BipartiteGraph,
    double,
    drawing_from_level,
    edge_list_text,
    family,
    g1,
    parse_edge_list_text,
    verify_drawing,
)
from .numbers import HALF, ONE, SQRT3, ZERO, QSqrt3, sign

__version__ = "0.1.0"

__all__ = [
    "BipartiteDrawing",
    "BipartiteGraph",
    "Chain",
    "CiResult",
    "ConstructionDoc",
    "DocumentError",
    "EpsilonSearchError",
    "HALF",
    "Level",
    "ONE",
    "Point",
    "QSqrt3",
    "SQRT3",
    "STEP_OFFSETS",
    "StepOffsets",
    "ZERO",
    "base_case",
    "build",
    "ci_bruteforce",
    "ci_dp",
    "convex_hull",
    "cross",
    "double",
    "drawing_from_level",
    "edge_list_text",
    "expected_witness_size",
    "family",
    "find_epsilon",
    "flatten",
    "g1",
    "is_convexly_independent",
    "is_south_east_chain",
    "midpoint",
    "midpoint_set",
    "minkowski_sum",
    "parse_edge_list_text",
    "pt",
    "rotate60",
    "sign",
    "slope",
    "step",
    "transform_chains",
    "translate",
    "verify_drawing",
]
