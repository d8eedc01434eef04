"""Shared helpers: random point corpora and small graph oracles."""

from __future__ import annotations

import math

import numpy as np
import pytest

from yaospanner import PointSet

TAU = 2.0 * math.pi

CORPUS_SIZES = (10, 50, 200)
CORPUS_DISTRIBUTIONS = ("uniform", "clusters", "annulus")
CORPUS_REPEATS = 12  # 3 sizes x 3 distributions x 12 seeds = 108 sets


def sample_cloud(rng: np.random.Generator, n: int, distribution: str) -> np.ndarray:
    if distribution == "uniform":
        return rng.uniform(0.0, 1000.0, (n, 2))
    if distribution == "clusters":
        centers = rng.uniform(0.0, 1000.0, (max(2, n // 20), 2))
        idx = rng.integers(0, len(centers), n)
        return centers[idx] + rng.normal(0.0, 30.0, (n, 2))
    if distribution == "annulus":
        ang = rng.uniform(0.0, TAU, n)
        rad = rng.uniform(400.0, 500.0, n)
        return np.c_[rad * np.cos(ang), rad * np.sin(ang)]
    raise ValueError(distribution)


def build_corpus(seed_base: int = 1000) -> list[PointSet]:
    sets = []
    for d, distribution in enumerate(CORPUS_DISTRIBUTIONS):
        for s, n in enumerate(CORPUS_SIZES):
            for rep in range(CORPUS_REPEATS):
                rng = np.random.default_rng(seed_base + 100 * d + 10 * s + rep)
                sets.append(PointSet(sample_cloud(rng, n, distribution)))
    return sets


@pytest.fixture(scope="session")
def corpus() -> list[PointSet]:
    return build_corpus()


def boundary_clear_points(rng: np.random.Generator, n: int, k: int = 5,
                          clearance: float = 1e-6) -> PointSet:
    """Random points whose pairwise directions stay away from cone
    boundaries, so rigid-motion tests cannot flip a cone assignment."""
    width = TAU / k
    while True:
        pts = rng.uniform(0.0, 100.0, (n, 2))
        dx = pts[:, 0][:, None] - pts[:, 0][None, :]
        dy = pts[:, 1][:, None] - pts[:, 1][None, :]
        ang = np.arctan2(dy, dx) % width
        off = np.minimum(ang, width - ang)
        off[np.eye(n, dtype=bool)] = np.inf
        if off.min() > clearance:
            return PointSet(pts)


def bfs_connected(n: int, undirected_edges: set[tuple[int, int]]) -> bool:
    """Independent connectivity oracle."""
    if n == 0:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in undirected_edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    queue = [0]
    while queue:
        u = queue.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == n
