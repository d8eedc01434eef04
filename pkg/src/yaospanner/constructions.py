"""Reference point sets: the 34-point worst case for the five-cone Yao graph
and the two-row corridor family whose Yao-Yao stretch grows without bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graphs import PointSet, build_yao_yao, undirected_view
from .stretch import shortest_paths_from

PROVENANCE_TABLE = "appendix-table"
PROVENANCE_SEED = "fig7-seed"
PROVENANCE_GENERATED = "generated"

# Integer coordinates of the 34-point configuration driving the stretch of
# the five-cone Yao graph above 2.87.  The first four points are the witness
# pair u, v and the two detour points z, w.
_LOWER_BOUND_COORDS = (
    (0, 0), (252, 82), (130, 230), (12, 193),
    (30, 302), (293, 269), (321, 229), (-143, 130),
    (-143, 80), (193, 384), (158, 367), (-135, 272),
    (-91, 287), (-153, -55), (371, 75), (410, 115),
    (334, 276), (341, 264), (-179, 97), (-180, 112),
    (-91, -75), (316, 36), (352, 229), (303, 297),
    (-167, 63), (-167, 147), (-26, -75), (371, 213),
    (51, 310), (-176, 37), (344, 274), (-189, 105),
    (99, 320), (-15, 284),
)
_LOWER_BOUND_LABELS = {0: "u", 1: "v", 2: "z", 3: "w"}

# Corridor seed: two rays converging at one degree each, five hops of 2.6 per
# gadget, and the second row anchored half a hop to the right so that the
# rows interleave like bricks.
CORRIDOR_RAY_DEG = 1.0
CORRIDOR_HOP = 2.6
CORRIDOR_HOPS_PER_LEVEL = 5
CORRIDOR_ANCHOR_B = (1.3, 3.5)
CORRIDOR_SCALE = 0.88
CORRIDOR_MAX_VALIDATED_LEVELS = 12


@dataclass
class NamedPointSet:
    """A point set with a name and provenance metadata."""

    name: str
    point_set: PointSet
    provenance: str
    metadata: dict = field(default_factory=dict)


def lower_bound_y5() -> NamedPointSet:
    """The fixed 34-point set; its five-cone Yao graph stretches the pair
    u, v by more than 2.87."""
    return NamedPointSet(
        name="lower-bound-y5",
        point_set=PointSet(_LOWER_BOUND_COORDS, dict(_LOWER_BOUND_LABELS)),
        provenance=PROVENANCE_TABLE,
        metadata={"points": len(_LOWER_BOUND_COORDS)},
    )


class CorridorShortcutError(RuntimeError):
    """The corridor self-validation found a surviving row-to-row edge."""

    def __init__(self, message: str, edge: tuple[int, int] | None = None):
        super().__init__(message)
        self.edge = edge


def _corridor_rows(levels: int, scale: float) -> tuple[list[float], list[float]]:
    """Arclengths of the two rows.

    Each level appends five hops; hop lengths shrink geometrically by
    `scale` per level.  From level two on, the second row's grid is shifted
    so that the cross-row stagger stays at half the local hop: the anchor
    offset equals half the seed hop, so the shift keeps row-to-row point
    pairs maximally far from the alignment at which a diagonal edge would
    survive the second construction stage.
    """
    rad = math.radians(CORRIDOR_RAY_DEG)
    anchor_x = CORRIDOR_ANCHOR_B[0]
    row_a: list[float] = []
    row_b: list[float] = []
    start = 0.0
    shift = 0.0
    for level in range(levels):
        hop = CORRIDOR_HOP * scale**level
        if level > 0:
            want = (hop / 2.0 - anchor_x / math.cos(rad)) % hop
            delta = want - shift % hop
            if delta > hop / 2.0:
                delta -= hop
            elif delta < -hop / 2.0:
                delta += hop
            shift += delta
        for h in range(1, CORRIDOR_HOPS_PER_LEVEL + 1):
            row_a.append(start + h * hop)
            row_b.append(start + h * hop + shift)
        start += CORRIDOR_HOPS_PER_LEVEL * hop
    return row_a, row_b


def _validate_corridor(ps: PointSet, n_row: int) -> dict:
    """Build the five-cone Yao-Yao graph and check the corridor survives.

    Requires: connected, the only undirected row-to-row edge is the far-end
    junction, and the shortest path between the two anchors walks the full
    corridor.  Raises CorridorShortcutError otherwise.
    """
    g = build_yao_yao(ps, k=5)
    und = undirected_view(g)
    junction = (n_row - 1, 2 * n_row - 1)
    for i, j in sorted(und.undirected_edge_set()):
        if (i < n_row) != (j < n_row) and (i, j) != junction:
            raise CorridorShortcutError(
                f"shortcut edge {ps.name_of(i)}-{ps.name_of(j)} ({i}, {j}) survived "
                "pruning; the extension rule needs coordinate adjustment",
                edge=(i, j),
            )
    dist, pred = shortest_paths_from(g, 0)
    if any(math.isinf(d) for d in dist):
        raise CorridorShortcutError("corridor graph is not connected")
    path = [n_row]
    while path[-1] != 0:
        path.append(pred[path[-1]])
    path.reverse()
    corridor = list(range(n_row)) + list(range(2 * n_row - 1, n_row - 1, -1))
    if path != corridor:
        raise CorridorShortcutError(
            "shortest anchor-to-anchor path skips part of the corridor"
        )
    ratio = dist[n_row] / math.hypot(*CORRIDOR_ANCHOR_B)
    return {"stretch": ratio, "path_length": dist[n_row]}


def yy5_unbounded_family(levels: int, scale: float = CORRIDOR_SCALE) -> NamedPointSet:
    """Corridor construction whose five-cone Yao-Yao stretch grows with
    `levels`.

    Level one is the fixed seed: anchors a = (0, 0) and b = (1.3, 3.5), one
    ray from each anchor converging at one degree, five hops of 2.6 per ray.
    Every further level appends five more hops to both rays with hop length
    scaled by `scale`, keeping the brick-like stagger between the rows.  The
    second construction stage then prunes every row-to-row edge except at
    the far end, so the only anchor-to-anchor path runs the whole corridor.

    The generator self-validates on every call and raises
    CorridorShortcutError when the built graph deviates from that shape;
    the default scale is validated through CORRIDOR_MAX_VALIDATED_LEVELS.
    """
    if levels < 1:
        raise ValueError("levels must be at least 1")
    rad = math.radians(CORRIDOR_RAY_DEG)
    ax_, ay_ = (0.0, 0.0)
    bx_, by_ = CORRIDOR_ANCHOR_B
    dax, day = math.cos(rad), math.sin(rad)
    dbx, dby = math.cos(-rad), math.sin(-rad)

    row_a, row_b = _corridor_rows(levels, scale)
    coords = [(ax_, ay_)]
    coords += [(ax_ + s * dax, ay_ + s * day) for s in row_a]
    coords += [(bx_, by_)]
    coords += [(bx_ + s * dbx, by_ + s * dby) for s in row_b]
    n_row = len(row_a) + 1
    labels = {0: "a", n_row: "b"}
    for i in range(1, n_row):
        labels[i] = f"a{i}"
        labels[n_row + i] = f"b{i}"
    ps = PointSet(coords, labels)
    check = _validate_corridor(ps, n_row)
    return NamedPointSet(
        name=f"yy5-corridor-L{levels}",
        point_set=ps,
        provenance=PROVENANCE_SEED if levels == 1 else PROVENANCE_GENERATED,
        metadata={
            "levels": levels,
            "variant": "scaled",
            "scale": scale,
            "row_points": n_row,
            "junction": [n_row - 1, 2 * n_row - 1],
            "stretch": check["stretch"],
        },
    )
