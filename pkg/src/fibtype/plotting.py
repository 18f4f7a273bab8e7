"""Matplotlib figures: diagrams with their face colouring and lanes, and verdict maps."""
from __future__ import annotations

from math import cos, pi, sin

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from .classify import Hyperbolicity, classify  # noqa: E402
from .diagram.coloring import BLACK, ColoredDisk  # noqa: E402
from .diagram.lanes import LaneSet  # noqa: E402
from .diagram.model import VanKampenDiagram  # noqa: E402
from .params import ParameterError  # noqa: E402

FACE_COLORS = {BLACK: "0.35", "white": "white"}
_VERDICT_INDEX = {Hyperbolicity.FINITE: 0, Hyperbolicity.NON_ELEMENTARY: 1,
                  Hyperbolicity.NOT_HYPERBOLIC: 2, Hyperbolicity.UNKNOWN: 3}
LANE_COLORS = ["tab:red", "tab:blue", "tab:green", "tab:orange", "tab:purple", "tab:brown"]


def tutte_layout(d: VanKampenDiagram) -> dict[int, tuple[float, float]]:
    """Boundary on the unit circle, each interior vertex at the mean of its neighbours."""
    outer = d.boundary_vertices()
    pos = {}
    L = len(outer)
    for i, v in enumerate(outer):
        t = pi / 2 - 2 * pi * i / L       # the boundary runs clockwise
        pos[v] = (cos(t), sin(t))
    inner = d.interior_vertices()
    if inner:
        idx = {v: i for i, v in enumerate(inner)}
        M = np.zeros((len(inner), len(inner)))
        rhs = np.zeros((len(inner), 2))
        for e in d.edges.values():
            for a, b in ((e.tail, e.head), (e.head, e.tail)):
                if a not in idx:
                    continue
                M[idx[a], idx[a]] += 1
                if b in idx:
                    M[idx[a], idx[b]] -= 1
                else:
                    rhs[idx[a]] += pos[b]
        sol = np.linalg.solve(M, rhs)
        for v, i in idx.items():
            pos[v] = (float(sol[i, 0]), float(sol[i, 1]))
    return pos


def draw_disk(cd: ColoredDisk, lanes: LaneSet | None = None, ax=None, title: str | None = None):
    """Faces filled by colour; lane elements outlined, one colour per element."""
    if ax is None:
        _, ax = plt.subplots(figsize=(6, 6))
    d = cd.diagram
    if d is not None:
        pts = d.positions or tutte_layout(d)
    else:
        pts = cd.points
    centres = {}
    for f, vs in cd.faces.items():
        xy = np.array([pts[v] for v in vs])
        centres[f] = xy.mean(axis=0)
        ax.add_patch(Polygon(xy, closed=True, facecolor=FACE_COLORS[cd.color[f]],
                             edgecolor="black", linewidth=0.8))
    if lanes is not None:
        for i, e in enumerate(lanes.elements):
            col = LANE_COLORS[i % len(LANE_COLORS)]
            for f in e.faces:
                xy = np.array([pts[v] for v in cd.faces[f]])
                ax.add_patch(Polygon(xy, closed=True, fill=False, edgecolor=col, linewidth=2.2))
            for lane in e.lanes:
                path = np.array([centres[lane.home]] + [centres[w] for w in lane.whites])
                ax.plot(path[:, 0], path[:, 1], "-o", color=col, markersize=3, linewidth=1.2)
    for f, c in centres.items():
        ax.text(c[0], c[1], str(f), ha="center", va="center", fontsize=7,
                color="white" if cd.color[f] == BLACK else "black")
    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.axis("off")
    if title:
        ax.set_title(title)
    return ax


def verdict_map(ns: list[int], path: str) -> None:
    """One panel per n: every (A, B) coloured by the classification verdict."""
    labels = ["finite", "non-elementary hyperbolic", "not hyperbolic", "unknown", "excluded"]
    colors = ["tab:green", "tab:blue", "tab:orange", "0.6", "white"]
    cols = min(4, len(ns))
    rows = (len(ns) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(3.2 * cols, 3.2 * rows), squeeze=False)
    cmap = matplotlib.colors.ListedColormap(colors)
    for ax, n in zip(axes.flat, ns):
        grid = np.full((n, n), 4)
        for A in range(n):
            for B in range(n):
                m, k = (A - B) % n, A
                try:
                    c = classify(n, m, k)
                except ParameterError:
                    continue
                grid[B, A] = _VERDICT_INDEX[c.hyperbolicity]
        ax.imshow(grid, origin="lower", cmap=cmap, vmin=-0.5, vmax=4.5)
        ax.set_title(f"n = {n}")
        ax.set_xlabel("A = k")
        ax.set_ylabel("B = k - m")
    for ax in list(axes.flat)[len(ns):]:
        ax.axis("off")
    handles = [matplotlib.patches.Patch(facecolor=c, edgecolor="black", label=t) for c, t in zip(colors, labels)]
    fig.legend(handles=handles, loc="lower center", ncol=len(labels), fontsize=8)
    fig.tight_layout(rect=(0, 0.06, 1, 1))
    fig.savefig(path)
    plt.close(fig)


def save_disk_figure(cd: ColoredDisk, lanes: LaneSet | None, path: str, title: str | None = None) -> None:
    fig, ax = plt.subplots(figsize=(6, 6))
    draw_disk(cd, lanes, ax, title)
    fig.savefig(path)
    plt.close(fig)
