"""Matplotlib figures for the reproduction report."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .graphs import DirectedGeomGraph
from .oracles import SeparationSweep, spanner_constants


def save_graph_figure(g: DirectedGeomGraph, path, witness: list[int] | None = None,
                      title: str | None = None) -> None:
    pts = g.point_set.points
    fig, ax = plt.subplots(figsize=(7, 7))
    for i, j in sorted(g.undirected_edge_set()):
        ax.plot([pts[i].x, pts[j].x], [pts[i].y, pts[j].y],
                color="0.55", lw=0.9, zorder=1)
    if witness:
        ax.plot([pts[i].x for i in witness], [pts[i].y for i in witness],
                color="crimson", lw=2.2, zorder=2, label="witness path")
        ax.legend(loc="best", fontsize=8)
    ax.scatter([p.x for p in pts], [p.y for p in pts], s=16, color="#1f77b4", zorder=3)
    for i, name in sorted(g.point_set.labels.items()):
        ax.annotate(name, (pts[i].x, pts[i].y), textcoords="offset points",
                    xytext=(4, 4), fontsize=8)
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_growth_figure(levels: list[int], stretches: list[float], path,
                       threshold: float | None = None) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(levels, stretches, marker="o", color="#1f77b4")
    if threshold is not None:
        ax.axhline(threshold, color="crimson", ls="--", lw=1,
                   label=f"bound {threshold:g}")
        ax.legend(loc="best", fontsize=8)
    ax.set_xlabel("corridor levels")
    ax.set_ylabel("stretch factor")
    ax.set_xticks(levels)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_separation_figure(sweep: SeparationSweep, path) -> None:
    """Heatmap of the candidate-neighbor separation over the angle grid."""
    if sweep.alpha_grid is None or sweep.separation is None:
        raise ValueError("sweep must be computed with return_field=True")
    k = spanner_constants()
    field = np.where(np.isfinite(sweep.separation), sweep.separation, np.nan)
    fig, ax = plt.subplots(figsize=(6, 5))
    extent = (sweep.alpha_grid[0], sweep.alpha_grid[-1],
              sweep.alpha_grid[0], sweep.alpha_grid[-1])
    im = ax.imshow(field.T, origin="lower", extent=extent, cmap="viridis",
                   vmax=k.separation_bound)
    ax.plot(*sweep.argmax, "r*", ms=12, label="maximum")
    ax.set_xlabel("detour angle at u (rad)")
    ax.set_ylabel("detour angle at v (rad)")
    ax.set_title(
        f"max separation {sweep.max_separation:.9f} "
        f"(bound {k.separation_bound:.9f})", fontsize=10)
    ax.legend(loc="upper right", fontsize=8)
    fig.colorbar(im, ax=ax, shrink=0.85)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
