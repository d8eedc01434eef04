"""Construction of directed Yao and Yao-Yao graphs over planar point sets.

The Yao graph connects every point to its closest neighbor in each of k
cones; the Yao-Yao graph additionally keeps, per point and cone, only the
shortest incoming Yao edge.  "Closest" always means the pair order realized
by :func:`yaospanner.geometry.pair_sort_key` (distance, then indices).
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Mapping, Sequence

from .geometry import ConeSystem, Point2, as_point, distance

VARIANT_YAO = "yao"
VARIANT_YAOYAO = "yaoyao"

_LENGTH_TOL = 1e-12


class PointSet:
    """An ordered set of distinct points with stable 0-based indices.

    Points may carry string labels (e.g. for naming witnesses in reports).
    Duplicate coordinates are rejected: a duplicated point would make
    "the closest point in a cone" ambiguous in meaning even though the
    index tie-break would still pick one deterministically.
    """

    __slots__ = ("points", "labels")

    def __init__(self, points: Iterable, labels: Mapping[int, str] | None = None):
        pts = tuple(as_point(p) for p in points)
        seen: dict[tuple[float, float], int] = {}
        for i, p in enumerate(pts):
            key = (p.x, p.y)
            if key in seen:
                raise ValueError(f"duplicate points at indices {seen[key]} and {i}: {key}")
            seen[key] = i
        lbl = {}
        if labels:
            for i, name in labels.items():
                i = int(i)
                if not 0 <= i < len(pts):
                    raise ValueError(f"label index {i} out of range")
                lbl[i] = str(name)
        self.points = pts
        self.labels = lbl

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point2:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def label(self, i: int) -> str | None:
        return self.labels.get(i)

    def name_of(self, i: int) -> str:
        """Label when present, else the index as a string."""
        return self.labels.get(i, str(i))

    def coords(self) -> list[list[float]]:
        return [[p.x, p.y] for p in self.points]


class DirectedGeomGraph:
    """A directed graph embedded on a PointSet, with cached edge lengths.

    Instances are treated as immutable; all fields are set at construction.
    """

    def __init__(
        self,
        point_set: PointSet,
        edges: Iterable[tuple[int, int]],
        k: int,
        variant: str,
        offset: float = 0.0,
        symmetrized: bool = False,
    ):
        if variant not in (VARIANT_YAO, VARIANT_YAOYAO):
            raise ValueError(f"unknown variant {variant!r}")
        self.point_set = point_set
        self.k = int(k)
        self.variant = variant
        self.offset = float(offset)
        self.symmetrized = bool(symmetrized)
        n = len(point_set)
        es = sorted({(int(i), int(j)) for i, j in edges})
        for i, j in es:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for {n} points")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
        self.edges = tuple(es)
        pts = point_set.points
        self.lengths = {(i, j): distance(pts[i], pts[j]) for i, j in es}

    @property
    def n(self) -> int:
        return len(self.point_set)

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.lengths

    def edge_length(self, i: int, j: int) -> float:
        return self.lengths[(i, j)]

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges)

    def undirected_edge_set(self) -> set[tuple[int, int]]:
        return {(min(i, j), max(i, j)) for i, j in self.edges}

    def out_edges(self, i: int) -> list[tuple[int, float]]:
        return [(j, w) for (a, j), w in self.lengths.items() if a == i]

    def adjacency(self, directed: bool = False) -> list[list[tuple[int, float]]]:
        """Adjacency lists; symmetrized unless directed=True."""
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        if directed:
            for (i, j), w in self.lengths.items():
                adj[i].append((j, w))
        else:
            for i, j in self.undirected_edge_set():
                w = self.lengths.get((i, j), self.lengths.get((j, i)))
                adj[i].append((j, w))
                adj[j].append((i, w))
        for lst in adj:
            lst.sort()
        return adj


def _cone_nearest(ps: PointSet, i: int, cones: ConeSystem) -> dict[int, tuple[float, int]]:
    """Per cone of point i: (distance, index) of the nearest other point."""
    pts = ps.points
    px, py = pts[i].x, pts[i].y
    best: dict[int, tuple[float, int]] = {}
    for j, q in enumerate(pts):
        if j == i:
            continue
        c = cones.cone_of_angle(math.atan2(q.y - py, q.x - px))
        cand = (math.hypot(q.x - px, q.y - py), j)
        if c not in best or cand < best[c]:
            best[c] = cand
    return best


def build_yao(ps: PointSet, k: int = 5, offset: float = 0.0) -> DirectedGeomGraph:
    """Directed Yao graph: each point gains one edge to the closest point
    in each of its k cones that contains any point at all."""
    if len(ps) < 1:
        raise ValueError("need at least one point")
    cones = ConeSystem(k, offset)
    edges = []
    for i in range(len(ps)):
        for _, (_, j) in _cone_nearest(ps, i, cones).items():
            edges.append((i, j))
    return DirectedGeomGraph(ps, edges, k=k, variant=VARIANT_YAO, offset=offset)


def build_yao_yao(ps: PointSet, k: int = 5, offset: float = 0.0) -> DirectedGeomGraph:
    """Directed Yao-Yao graph: Yao edges, then per target point and cone keep
    only the shortest incoming edge whose source lies in that cone."""
    yao = build_yao(ps, k, offset)
    cones = ConeSystem(k, offset)
    pts = ps.points
    keep: dict[tuple[int, int], tuple[float, int]] = {}
    for i, j in yao.edges:
        c = cones.cone_of(pts[j], pts[i])
        cand = (yao.edge_length(i, j), i)
        key = (j, c)
        if key not in keep or cand < keep[key]:
            keep[key] = cand
    edges = [(i, j) for (j, _), (_, i) in keep.items()]
    return DirectedGeomGraph(ps, edges, k=k, variant=VARIANT_YAOYAO, offset=offset)


def undirected_view(g: DirectedGeomGraph) -> DirectedGeomGraph:
    """Symmetrized copy: (i, j) present iff either direction was present."""
    edges = set()
    for i, j in g.edges:
        edges.add((i, j))
        edges.add((j, i))
    return DirectedGeomGraph(
        g.point_set, edges, k=g.k, variant=g.variant, offset=g.offset, symmetrized=True
    )


def validate(g: DirectedGeomGraph) -> list[str]:
    """Check the structural invariants of a built graph.

    Returns one message per violation (empty list when clean): cached edge
    lengths must match the point coordinates, and unless the graph is a
    symmetrized view, each vertex may have at most one outgoing edge per cone
    and -- for the Yao-Yao variant -- at most one kept incoming edge per cone.
    """
    issues = []
    pts = g.point_set.points
    cones = ConeSystem(g.k, g.offset)
    for (i, j), w in g.lengths.items():
        actual = distance(pts[i], pts[j])
        if abs(actual - w) > _LENGTH_TOL:
            issues.append(f"edge ({i}, {j}) cached length {w} != distance {actual}")
    if g.symmetrized:
        return issues

    out_cone: dict[tuple[int, int], list[int]] = {}
    in_cone: dict[tuple[int, int], list[int]] = {}
    for i, j in g.edges:
        out_cone.setdefault((i, cones.cone_of(pts[i], pts[j])), []).append(j)
        in_cone.setdefault((j, cones.cone_of(pts[j], pts[i])), []).append(i)
    for (i, c), targets in sorted(out_cone.items()):
        if len(targets) > 1:
            issues.append(
                f"vertex {i} has {len(targets)} outgoing edges in cone {c}: {sorted(targets)}"
            )
    if g.variant == VARIANT_YAOYAO:
        for (j, c), sources in sorted(in_cone.items()):
            if len(sources) > 1:
                issues.append(
                    f"vertex {j} kept {len(sources)} incoming edges in cone {c}: {sorted(sources)}"
                )
    return issues


def graph_to_json(g: DirectedGeomGraph) -> dict:
    """JSON-serializable form of a graph (lengths are derived, not stored)."""
    data = {
        "k": g.k,
        "variant": g.variant,
        "offset": g.offset,
        "points": g.point_set.coords(),
        "labels": {str(i): s for i, s in sorted(g.point_set.labels.items())},
        "edges": [[i, j] for i, j in g.edges],
    }
    if g.symmetrized:
        data["symmetrized"] = True
    return data


def graph_from_json(data: dict) -> DirectedGeomGraph:
    """Rebuild a graph from its JSON form, revalidating the invariants."""
    ps = PointSet(data["points"], {int(i): s for i, s in data.get("labels", {}).items()})
    g = DirectedGeomGraph(
        ps,
        [(int(i), int(j)) for i, j in data["edges"]],
        k=data["k"],
        variant=data["variant"],
        offset=data.get("offset", 0.0),
        symmetrized=data.get("symmetrized", False),
    )
    issues = validate(g)
    if issues:
        raise ValueError("loaded graph fails validation: " + "; ".join(issues))
    return g


def save_graph(g: DirectedGeomGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_json(g), fh, indent=1)
        fh.write("\n")


def load_graph(path) -> DirectedGeomGraph:
    with open(path, encoding="utf-8") as fh:
        return graph_from_json(json.load(fh))
