"""Planar geometric primitives: distances, angles, cones, rigid transforms.

Angles are radians everywhere; ray directions live in [0, 2*pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

TAU = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class Point2:
    """A point in the plane with finite coordinates."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x!r}, {self.y!r})")

    def __iter__(self) -> Iterator[float]:
        return iter((self.x, self.y))


def as_point(p) -> Point2:
    """Coerce an (x, y) pair into a Point2."""
    if isinstance(p, Point2):
        return p
    x, y = p
    return Point2(float(x), float(y))


def distance(a: Point2, b: Point2) -> float:
    """Euclidean distance between two points."""
    return math.hypot(b.x - a.x, b.y - a.y)


def direction_angle(origin: Point2, target: Point2) -> float:
    """Direction of the ray origin -> target, in [0, 2*pi)."""
    if origin.x == target.x and origin.y == target.y:
        raise ValueError("degenerate direction: coincident points")
    return math.atan2(target.y - origin.y, target.x - origin.x) % TAU


def angle_ccw(x: Point2, y: Point2, z: Point2) -> float:
    """Counterclockwise angle at y, from ray y->x to ray y->z, in [0, 2*pi)."""
    return (direction_angle(y, z) - direction_angle(y, x)) % TAU


def angle_magnitude(x: Point2, y: Point2, z: Point2) -> float:
    """Unsigned angle at y between rays y->x and y->z, in [0, pi]."""
    a = angle_ccw(x, y, z)
    return min(a, TAU - a)


@dataclass(frozen=True, slots=True)
class ConeSystem:
    """k half-open cones of width 2*pi/k sharing one global orientation.

    Cone i (1-indexed, counterclockwise) spans directions
    [rotation_offset + (i-1)*2*pi/k, rotation_offset + i*2*pi/k); together the
    cones partition all directions, so every non-degenerate ray falls in
    exactly one cone.  With the default zero offset the start-ray of cone 1
    points horizontally to the right.
    """

    k: int = 5
    rotation_offset: float = 0.0

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"need at least 2 cones, got k={self.k}")
        if not math.isfinite(self.rotation_offset):
            raise ValueError("non-finite rotation offset")

    @property
    def width(self) -> float:
        return TAU / self.k

    def cone_of_angle(self, angle: float) -> int:
        """Cone index in [1, k] containing the given absolute direction."""
        rel = (angle - self.rotation_offset) % TAU
        # Guard the i == k case when rel/width rounds up to exactly k.
        return min(int(rel / self.width), self.k - 1) + 1

    def cone_of(self, apex: Point2, target: Point2) -> int:
        """Cone index in [1, k] at apex containing target."""
        return self.cone_of_angle(direction_angle(apex, target))

    def start_angle(self, i: int) -> float:
        self._check_index(i)
        return (self.rotation_offset + (i - 1) * self.width) % TAU

    def end_angle(self, i: int) -> float:
        self._check_index(i)
        return (self.rotation_offset + i * self.width) % TAU

    def bisector_angle(self, i: int) -> float:
        self._check_index(i)
        return (self.rotation_offset + (i - 0.5) * self.width) % TAU

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.k:
            raise ValueError(f"cone index {i} out of range [1, {self.k}]")


def cone_index(apex: Point2, target: Point2, cones: ConeSystem) -> int:
    """Cone of `cones` at apex that contains target (1-indexed)."""
    return cones.cone_of(apex, target)


def rotate(points: Sequence[Point2], center: Point2, angle: float) -> list[Point2]:
    """Rotate points counterclockwise by angle around center."""
    c, s = math.cos(angle), math.sin(angle)
    out = []
    for p in points:
        dx, dy = p.x - center.x, p.y - center.y
        out.append(Point2(center.x + c * dx - s * dy, center.y + s * dx + c * dy))
    return out


def mirror(points: Sequence[Point2], axis_point: Point2, axis_angle: float) -> list[Point2]:
    """Reflect points across the line through axis_point at axis_angle."""
    c, s = math.cos(2.0 * axis_angle), math.sin(2.0 * axis_angle)
    out = []
    for p in points:
        dx, dy = p.x - axis_point.x, p.y - axis_point.y
        out.append(Point2(axis_point.x + c * dx + s * dy, axis_point.y + s * dx - c * dy))
    return out


def pair_sort_key(points: Sequence[Point2], i: int, j: int) -> tuple[float, int, int]:
    """Sort key realizing the global order on unordered index pairs.

    Pairs compare by Euclidean distance first; exact ties break by
    lexicographic comparison of the sorted index pair, which keeps the order
    strict and reproducible.
    """
    a, b = (i, j) if i <= j else (j, i)
    return (distance(points[a], points[b]), a, b)


def sorted_pairs(points: Sequence[Point2]) -> list[tuple[int, int]]:
    """All unordered index pairs, sorted by the pair order."""
    n = len(points)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pairs.sort(key=lambda p: pair_sort_key(points, *p))
    return pairs
