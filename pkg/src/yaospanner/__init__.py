"""Yao and Yao-Yao graphs on planar point sets, exact stretch factors, and
numeric verification of the five-cone spanner bounds."""

from .geometry import (
    ConeSystem,
    Point2,
    angle_ccw,
    angle_magnitude,
    cone_index,
    distance,
    mirror,
    pair_sort_key,
    rotate,
    sorted_pairs,
)
from .graphs import (
    DirectedGeomGraph,
    PointSet,
    build_yao,
    build_yao_yao,
    graph_from_json,
    graph_to_json,
    load_graph,
    save_graph,
    undirected_view,
    validate,
)
from .stretch import (
    StretchReport,
    brute_force_stretch,
    is_spanner,
    shortest_paths_from,
    stretch_factor,
)
from .oracles import (
    Fan,
    OracleReport,
    SpannerConstants,
    check_lemma1,
    check_lemma1_identity,
    check_lemma2,
    fan_contains,
    spanner_constants,
    sweep_prop1,
    verify_constants,
    verify_induction_goal,
)
from .constructions import (
    CorridorShortcutError,
    NamedPointSet,
    lower_bound_y5,
    yy5_unbounded_family,
)

__all__ = [
    "ConeSystem", "Point2", "angle_ccw", "angle_magnitude", "cone_index",
    "distance", "mirror", "pair_sort_key", "rotate", "sorted_pairs",
    "DirectedGeomGraph", "PointSet", "build_yao", "build_yao_yao",
    "graph_from_json", "graph_to_json", "load_graph", "save_graph",
    "undirected_view", "validate",
    "StretchReport", "brute_force_stretch", "is_spanner",
    "shortest_paths_from", "stretch_factor",
    "Fan", "OracleReport", "SpannerConstants", "check_lemma1",
    "check_lemma1_identity", "check_lemma2", "fan_contains",
    "spanner_constants", "sweep_prop1", "verify_constants",
    "verify_induction_goal",
    "CorridorShortcutError", "NamedPointSet", "lower_bound_y5",
    "yy5_unbounded_family",
]

__version__ = "0.1.0"
