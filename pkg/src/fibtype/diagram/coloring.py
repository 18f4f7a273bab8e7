"""Black/white face colourings of triangulated disks and the forbidden configurations.

A face is black when it touches an interior vertex of degree at most 6.
Colourings can come from a diagram or from an abstract triangulated disk
given by triangle coordinates (the ``.cdk`` format), which lets the
pattern and lane machinery run on configurations with no letter labels.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Hashable

import networkx as nx
from networkx.algorithms import isomorphism

from .model import DiagramError, VanKampenDiagram

BLACK, WHITE = "black", "white"


@dataclass
class ColoredDisk:
    faces: dict[Hashable, tuple]                   # face -> its vertices (for drawing)
    adjacency: dict[Hashable, set]                 # faces sharing a side
    boundary: set                                  # faces with a side on the disk boundary
    color: dict[Hashable, str]
    name: str = ""
    diagram: VanKampenDiagram | None = field(default=None, repr=False)
    points: dict[Hashable, tuple[float, float]] | None = None

    def black(self) -> list:
        return [f for f in self.faces if self.color[f] == BLACK]

    def white(self) -> list:
        return [f for f in self.faces if self.color[f] == WHITE]

    def neighbours(self, f, color: str | None = None) -> list:
        out = sorted(self.adjacency[f], key=_sort_key)
        return out if color is None else [g for g in out if self.color[g] == color]

    def is_boundary(self, f) -> bool:
        return f in self.boundary

    def dual_graph(self) -> nx.Graph:
        g = nx.Graph()
        for f in self.faces:
            g.add_node(f, color=self.color[f])
        for f, nb in self.adjacency.items():
            for h in nb:
                g.add_edge(f, h)
        return g

    def to_dict(self) -> dict:
        if self.points is None:
            raise ValueError("only coordinate disks can be serialised")
        return {
            "kind": "colored-disk", "name": self.name,
            "triangles": [{"id": f, "color": self.color[f], "points": [list(self.points[v]) for v in vs]}
                          for f, vs in self.faces.items()],
        }


def _sort_key(x) -> tuple:
    return (type(x).__name__, x)


def _key(p) -> tuple[int, int]:
    # coordinates in the data files carry three decimals
    return (round(float(p[0]) * 1000), round(float(p[1]) * 1000))


def from_triangles(triangles: list[dict], name: str = "") -> ColoredDisk:
    """Disk from ``[{"id", "color", "points": [[x, y] x 3]}]``; faces touch when they share a side."""
    faces, color, pts = {}, {}, {}
    sides: dict[frozenset, list] = {}
    for t in triangles:
        try:
            fid, c, ps = t["id"], t["color"], t["points"]
        except (KeyError, TypeError):
            raise DiagramError("malformed", f"bad triangle entry {t!r}") from None
        if c not in (BLACK, WHITE):
            raise DiagramError("malformed", f"triangle {fid}: colour must be black or white")
        if len(ps) != 3:
            raise DiagramError("malformed", f"triangle {fid}: need three points")
        if fid in faces:
            raise DiagramError("malformed", f"duplicate triangle id {fid}")
        keys = tuple(_key(p) for p in ps)
        if len(set(keys)) != 3:
            raise DiagramError("malformed", f"triangle {fid} is degenerate")
        for k_, p in zip(keys, ps):
            pts[k_] = (float(p[0]), float(p[1]))
        faces[fid] = keys
        color[fid] = c
        for i in range(3):
            sides.setdefault(frozenset((keys[i], keys[(i + 1) % 3])), []).append(fid)
    adj: dict = {f: set() for f in faces}
    boundary = set()
    for s, fs in sides.items():
        if len(fs) > 2:
            raise DiagramError("malformed", f"side shared by {len(fs)} triangles")
        if len(fs) == 2:
            adj[fs[0]].add(fs[1])
            adj[fs[1]].add(fs[0])
        else:
            boundary.add(fs[0])
    return ColoredDisk(faces, adj, boundary, color, name, points=pts)


def parse_disk(text: str) -> ColoredDisk:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError("malformed", f"not a JSON document: {exc}") from None
    if not isinstance(doc, dict) or doc.get("kind") != "colored-disk":
        raise DiagramError("malformed", 'expected {"kind": "colored-disk", ...}')
    return from_triangles(doc.get("triangles", []), doc.get("name", ""))


def small_vertices(d: VanKampenDiagram) -> set[int]:
    """Interior vertices of degree at most 6."""
    return {v for v in d.interior_vertices() if d.degree(v) <= 6}


def color_faces(d: VanKampenDiagram) -> ColoredDisk:
    V = small_vertices(d)
    faces, color = {}, {}
    for fid, cyc in d.faces.items():
        vs = tuple(d.tail(x) for x in cyc)
        faces[fid] = vs
        color[fid] = BLACK if V.intersection(vs) else WHITE
    adj = {fid: {g for g in d.face_neighbours(fid) if g is not None and g != fid} for fid in d.faces}
    return ColoredDisk(faces, adj, d.boundary_faces() - {None}, color, diagram=d,
                       points=d.positions)


# ---------------------------------------------------------------- forbidden configurations

PATTERN_FILES = [f"fig3-{i}.cdk" for i in range(1, 6)]


def load_data(name: str) -> str:
    return resources.files("fibtype").joinpath("data", name).read_text()


def forbidden_configurations() -> list[ColoredDisk]:
    return [parse_disk(load_data(f)) for f in PATTERN_FILES]


@dataclass(frozen=True)
class PatternMatch:
    pattern: int                     # 1-based
    mapping: tuple[tuple, ...]       # (pattern face, disk face)

    def __str__(self) -> str:
        return f"forbidden pattern #{self.pattern} matched"


def forbidden_patterns(cd: ColoredDisk, patterns: list[ColoredDisk] | None = None) -> list[PatternMatch]:
    """One match per pattern that embeds, colour-preserving, into the disk's face adjacency graph."""
    if patterns is None:
        patterns = forbidden_configurations()
    host = cd.dual_graph()
    out = []
    for i, pat in enumerate(patterns, 1):
        gm = isomorphism.GraphMatcher(host, pat.dual_graph(),
                                      node_match=lambda a, b: a["color"] == b["color"])
        for m in gm.subgraph_monomorphisms_iter():
            out.append(PatternMatch(i, tuple(sorted(((p, h) for h, p in m.items()), key=str))))
            break
    return out


def black_white_violations(cd: ColoredDisk) -> list:
    """Black faces with more than one white neighbour."""
    return [f for f in cd.black() if len(cd.neighbours(f, WHITE)) > 1]
