"""Reading and writing point files (JSON and CSV)."""

from __future__ import annotations

import csv
import json

from .constructions import NamedPointSet
from .graphs import PointSet


def read_points(path) -> PointSet:
    """Read a point file.

    JSON: either a bare list [[x, y], ...] or an object with a "points" list
    and an optional "labels" map (extra keys are ignored, so generated files
    round-trip).  CSV: header ``x,y`` or ``x,y,label``.
    """
    text = open(path, encoding="utf-8").read()
    name = str(path)
    if name.lower().endswith(".json") or text.lstrip()[:1] in ("[", "{"):
        data = json.loads(text)
        if isinstance(data, dict):
            return PointSet(data["points"], data.get("labels") or {})
        return PointSet(data)
    return _points_from_csv(text)


def _points_from_csv(text: str) -> PointSet:
    rows = list(csv.reader(text.splitlines()))
    if not rows:
        raise ValueError("line 1: empty point file")
    header = [cell.strip().lower() for cell in rows[0]]
    if header not in (["x", "y"], ["x", "y", "label"]):
        raise ValueError(f"line 1: expected header 'x,y' or 'x,y,label', got {rows[0]!r}")
    has_label = len(header) == 3
    coords = []
    labels = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) < 2:
            raise ValueError(f"line {lineno}: expected at least two fields, got {row!r}")
        try:
            x, y = float(row[0]), float(row[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: bad coordinate in {row!r}: {exc}") from None
        if has_label and len(row) >= 3 and row[2].strip():
            labels[len(coords)] = row[2].strip()
        coords.append((x, y))
    return PointSet(coords, labels)


def _as_pointset(obj) -> tuple[PointSet, dict]:
    if isinstance(obj, NamedPointSet):
        extra = {"name": obj.name, "provenance": obj.provenance, "metadata": obj.metadata}
        return obj.point_set, extra
    return obj, {}


def write_points_json(obj, path) -> None:
    """Write a PointSet or NamedPointSet as JSON, labels preserved."""
    ps, extra = _as_pointset(obj)
    data = dict(extra)
    data["points"] = ps.coords()
    data["labels"] = {str(i): s for i, s in sorted(ps.labels.items())}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def write_points_csv(obj, path) -> None:
    """Write a PointSet or NamedPointSet as CSV with header x,y,label."""
    ps, _ = _as_pointset(obj)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "label"])
        for i, p in enumerate(ps.points):
            writer.writerow([repr(p.x), repr(p.y), ps.labels.get(i, "")])
