"""Stretch-factor analysis: shortest paths, witness reports, spanner verdicts.

Stretch is computed over the undirected view of a graph by default, which is
what the spanner bounds for Yao graphs are about; directed semantics are
available behind a flag for exploration.
"""

from __future__ import annotations

import csv
import heapq
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .geometry import distance
from .graphs import DirectedGeomGraph

INF = math.inf

BRUTE_FORCE_MAX_POINTS = 500


def worker_count() -> int:
    """Worker cap for parallel sections; YAO_SPANNER_THREADS overrides."""
    cap = min(os.cpu_count() or 1, 8)
    env = os.environ.get("YAO_SPANNER_THREADS")
    if env:
        try:
            cap = min(cap, max(1, int(env)))
        except ValueError:
            pass
    return cap


@dataclass
class StretchReport:
    """Worst-case ratio of graph distance to Euclidean distance.

    max_ratio is +inf when some pair is unreachable, in which case
    witness_pair names one such pair and witness_path is empty.
    """

    max_ratio: float
    witness_pair: tuple[int, int]
    witness_path: list[int]
    pair_count: int
    n: int
    per_pair_ratios: np.ndarray | None = field(default=None, repr=False)

    @property
    def connected(self) -> bool:
        return math.isfinite(self.max_ratio)

    def to_json_dict(self) -> dict:
        return {
            "max_ratio": self.max_ratio if self.connected else "inf",
            "witness": list(self.witness_pair),
            "path": list(self.witness_path),
            "n": self.n,
        }


def shortest_paths_from(
    g: DirectedGeomGraph, source: int, directed: bool = False
) -> tuple[list[float], list[int]]:
    """Dijkstra from one source; returns (distances, predecessors).

    Unreachable vertices get distance +inf and predecessor -1.
    """
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for {g.n} points")
    return _dijkstra(g.adjacency(directed=directed), source)


def _dijkstra(adj: list[list[tuple[int, float]]], source: int) -> tuple[list[float], list[int]]:
    n = len(adj)
    dist = [INF] * n
    pred = [-1] * n
    dist[source] = 0.0
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v, w in adj[u]:
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))
    return dist, pred


def _path_from_preds(pred: list[int], source: int, target: int) -> list[int]:
    path = [target]
    while path[-1] != source:
        p = pred[path[-1]]
        if p < 0:
            return []
        path.append(p)
    path.reverse()
    return path


def _all_pairs_dijkstra(g: DirectedGeomGraph, directed: bool):
    adj = g.adjacency(directed=directed)
    sources = range(g.n)
    workers = worker_count()
    if workers > 1 and g.n >= 64:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda s: _dijkstra(adj, s), sources))
    else:
        results = [_dijkstra(adj, s) for s in sources]
    dists = [r[0] for r in results]
    preds = [r[1] for r in results]
    return dists, preds


def _report_from_dists(g, dists, preds, directed, keep_pairs) -> StretchReport:
    n = g.n
    pts = g.point_set.points
    pair_count = n * (n - 1) // 2
    ratios = np.full((n, n), np.nan) if keep_pairs else None

    best = 0.0
    witness = (0, 1)
    unreachable = None
    for i in range(n):
        di = dists[i]
        for j in range(i + 1, n):
            d = di[j]
            if directed:
                # worst direction of the ordered pair
                d = max(d, dists[j][i])
            if d == INF:
                if unreachable is None:
                    unreachable = (i, j)
                if ratios is not None:
                    ratios[i, j] = ratios[j, i] = INF
                continue
            r = d / distance(pts[i], pts[j])
            if ratios is not None:
                ratios[i, j] = ratios[j, i] = r
            if r > best:
                best = r
                witness = (i, j)
    if unreachable is not None:
        return StretchReport(INF, unreachable, [], pair_count, n, ratios)
    i, j = witness
    path = _path_from_preds(preds[i], i, j)
    if directed and dists[j][i] > dists[i][j]:
        path = _path_from_preds(preds[j], j, i)
    return StretchReport(best, witness, path, pair_count, n, ratios)


def stretch_factor(
    g: DirectedGeomGraph, directed: bool = False, keep_pairs: bool = False
) -> StretchReport:
    """Maximum over point pairs of graph distance / Euclidean distance.

    Deterministic: pairs are scanned in index order and only strictly larger
    ratios displace the witness.
    """
    if g.n < 2:
        raise ValueError("stretch factor needs at least 2 points")
    dists, preds = _all_pairs_dijkstra(g, directed)
    return _report_from_dists(g, dists, preds, directed, keep_pairs)


def is_spanner(
    g: DirectedGeomGraph, rho: float, tolerance: float = 1e-9, directed: bool = False
) -> tuple[bool, StretchReport]:
    """Whether every pair's graph distance is within rho times its
    Euclidean distance (up to tolerance)."""
    report = stretch_factor(g, directed=directed)
    return report.max_ratio <= rho + tolerance, report


def brute_force_stretch(
    g: DirectedGeomGraph, directed: bool = False, keep_pairs: bool = False
) -> StretchReport:
    """Independent all-pairs oracle via Floyd-Warshall relaxation.

    Same contract as stretch_factor; O(n^3), capped at
    BRUTE_FORCE_MAX_POINTS points.  Used to cross-check the Dijkstra path.
    """
    n = g.n
    if n < 2:
        raise ValueError("stretch factor needs at least 2 points")
    if n > BRUTE_FORCE_MAX_POINTS:
        raise ValueError(f"brute-force oracle capped at {BRUTE_FORCE_MAX_POINTS} points")

    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    nxt = np.full((n, n), -1, dtype=np.int64)
    for (i, j), w in g.lengths.items():
        if w < dist[i, j]:
            dist[i, j] = w
            nxt[i, j] = j
        if not directed and w < dist[j, i]:
            dist[j, i] = w
            nxt[j, i] = i
    for k in range(n):
        through = dist[:, k, None] + dist[None, k, :]
        better = through < dist
        if better.any():
            dist = np.where(better, through, dist)
            nxt = np.where(better, np.broadcast_to(nxt[:, k, None], (n, n)), nxt)

    pts = g.point_set.points
    euclid = np.array([[distance(p, q) for q in pts] for p in pts])
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = dist / euclid
    iu = np.triu_indices(n, 1)
    pair_count = n * (n - 1) // 2

    pair_vals = np.maximum(ratios[iu], ratios.T[iu]) if directed else ratios[iu]
    if np.isinf(pair_vals).any():
        flat = int(np.argmax(np.isinf(pair_vals)))
        witness = (int(iu[0][flat]), int(iu[1][flat]))
        return StretchReport(INF, witness, [], pair_count, n,
                             ratios if keep_pairs else None)

    flat = int(np.argmax(pair_vals))
    best = float(pair_vals[flat])
    i, j = int(iu[0][flat]), int(iu[1][flat])
    src, dst = (i, j)
    if directed and ratios[j, i] > ratios[i, j]:
        src, dst = (j, i)
    path = [src]
    while path[-1] != dst:
        path.append(int(nxt[path[-1], dst]))
    return StretchReport(best, (i, j), path, pair_count, n,
                         ratios if keep_pairs else None)


def path_length(g: DirectedGeomGraph, path: list[int]) -> float:
    """Summed Euclidean length of consecutive path hops."""
    pts = g.point_set.points
    return sum(distance(pts[a], pts[b]) for a, b in zip(path, path[1:]))


def write_pair_ratios_csv(g: DirectedGeomGraph, path, directed: bool = False) -> None:
    """Dump per-pair graph distance, Euclidean distance and ratio as CSV."""
    report = stretch_factor(g, directed=directed, keep_pairs=True)
    pts = g.point_set.points
    names = g.point_set.name_of
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["i", "j", "name_i", "name_j", "euclidean", "graph", "ratio"])
        for i in range(g.n):
            for j in range(i + 1, g.n):
                r = report.per_pair_ratios[i, j]
                e = distance(pts[i], pts[j])
                gdist = r * e if math.isfinite(r) else INF
                writer.writerow([i, j, names(i), names(j), repr(e), repr(gdist), repr(float(r))])
