"""Ant walks, ant lanes and the lane set used for curvature distribution.

An ant starts in a black face (its home), steps into the home's white
neighbour, and keeps moving from a white face into the next white face
only while it is forced to: the current face touches a black face other
than home and there is exactly one white neighbour it has not just left.
It stops as soon as no move is forced.

The lane of an ant is its home, the white faces it walks through and
every black face touching one of them.  A junction is a white face of a
lane with no black neighbour.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable

from .coloring import BLACK, WHITE, ColoredDisk
from .model import VanKampenDiagram, curvature_report, vertex_label


class StructuralError(RuntimeError):
    """The colouring contradicts a structural property the lane argument relies on."""


@dataclass(frozen=True)
class AntLane:
    home: Hashable
    whites: tuple                # walk order
    blacks: tuple                # sorted
    junction: Hashable | None
    destination: str             # "home", "junction", "boundary", "double-black" or "stop"

    @property
    def type(self) -> tuple[int, int]:
        return (len(self.blacks), len(self.whites))

    @property
    def faces(self) -> frozenset:
        return frozenset(self.whites) | frozenset(self.blacks)

    def __str__(self) -> str:
        return f"lane home={self.home} type={self.type} whites={list(self.whites)}"


def _key(x) -> tuple:
    return (type(x).__name__, x)


def ant_walk(cd: ColoredDisk, home) -> AntLane:
    if cd.color.get(home) != BLACK:
        raise ValueError(f"home face {home!r} is not black")
    first = cd.neighbours(home, WHITE)
    if len(first) > 1:
        raise StructuralError(f"black face {home!r} has {len(first)} white neighbours")
    if not first:
        return AntLane(home, (), (home,), None, "home")
    whites = [first[0]]
    visited = {home, first[0]}
    prev, cur = home, first[0]
    while True:
        others = [b for b in cd.neighbours(cur, BLACK) if b != home]
        ahead = [w for w in cd.neighbours(cur, WHITE) if w != prev]
        if not others or not ahead:
            break
        if len(ahead) > 1:
            raise StructuralError(f"two forced moves out of white face {cur!r}")
        nxt = ahead[0]
        if nxt in visited:
            raise StructuralError(f"ant from {home!r} revisits face {nxt!r}")
        visited.add(nxt)
        whites.append(nxt)
        prev, cur = cur, nxt

    blacks = {home}
    junction = None
    for w in whites:
        nb = cd.neighbours(w, BLACK)
        blacks.update(nb)
        if not nb:
            if junction is not None:
                raise StructuralError(f"lane from {home!r} has two junctions")
            junction = w
    last = whites[-1]
    others = [b for b in cd.neighbours(last, BLACK) if b != home]
    if junction is not None:
        dest = "junction"
    elif not others:
        dest = "stop"
    elif cd.is_boundary(last) or len(cd.adjacency[last]) < 3:
        dest = "boundary"
    else:
        dest = "double-black"
    return AntLane(home, tuple(whites), tuple(sorted(blacks, key=_key)), junction, dest)


def lane_shape(lane: AntLane) -> str | None:
    """Which of the admissible lane shapes the lane has, or None."""
    b, w = lane.type
    if (b, w) == (1, 0):
        return "(1,0)"
    if (b, w) == (1, 1):
        return "(1,1)"
    if b == w >= 2 and lane.junction is not None:
        return "b=w"
    if b - 1 == w >= 1 and lane.junction is None and lane.destination == "boundary":
        return "b-1=w"
    if b - 2 == w >= 1 and lane.junction is None and lane.destination == "double-black":
        return "b-2=w"
    return None


@dataclass(frozen=True)
class LaneElement:
    lanes: tuple[AntLane, ...]       # one lane, or the lanes joined at a common junction
    junction: Hashable | None

    @property
    def faces(self) -> frozenset:
        out = frozenset()
        for lane in self.lanes:
            out |= lane.faces
        return out

    @property
    def type(self) -> tuple[int, int]:
        b = sum(lane.type[0] for lane in self.lanes)
        w = sum(lane.type[1] for lane in self.lanes) - (len(self.lanes) - 1)
        return (b, w)

    @property
    def name(self) -> str:
        return "#".join(f"({a},{b})" for a, b in (lane.type for lane in self.lanes))


@dataclass
class LaneSet:
    lanes: list[AntLane]         # one per black home
    maximal: list[AntLane]
    elements: list[LaneElement]

    def covered(self) -> frozenset:
        out = frozenset()
        for e in self.elements:
            out |= e.faces
        return out


def lane_decomposition(cd: ColoredDisk) -> LaneSet:
    lanes = [ant_walk(cd, h) for h in sorted(cd.black(), key=_key)]
    by_faces: dict[frozenset, AntLane] = {}
    for lane in lanes:
        by_faces.setdefault(lane.faces, lane)
    distinct = list(by_faces.values())
    maximal = [a for a in distinct if not any(a.faces < b.faces for b in distinct)]

    groups: dict = {}
    singles = []
    for lane in maximal:
        if lane.junction is None:
            singles.append(LaneElement((lane,), None))
        else:
            groups.setdefault(lane.junction, []).append(lane)
    elements = singles
    for j, group in groups.items():
        if len(group) > 3:
            raise StructuralError(f"junction {j!r} is shared by {len(group)} maximal lanes")
        elements.append(LaneElement(tuple(group), j))

    for e in elements:
        b, w = e.type
        cols = [cd.color[f] for f in e.faces]
        if (cols.count(BLACK), cols.count(WHITE)) != (b, w):
            raise StructuralError(f"lanes joined at {e.junction!r} overlap away from the junction")
    seen: dict = {}
    for i, e in enumerate(elements):
        for f in e.faces:
            if f in seen:
                raise StructuralError(f"face {f!r} lies in two elements of the lane set")
            seen[f] = i
    return LaneSet(lanes, maximal, elements)


# ---------------------------------------------------------------- curvature

@dataclass
class LaneCurvature:
    kappa: list[Fraction]            # per element
    average: list[Fraction]
    kappa_max: Fraction | None       # largest average over the elements
    hypothesis: bool
    reason: str
    verdict: bool | None             # kappa_max <= -1, or None when the hypothesis fails
    face_total: Fraction             # sum of kappa over all faces
    interior_total: Fraction         # sum of kappa over interior vertices


def lane_hypothesis(d: VanKampenDiagram) -> tuple[bool, str]:
    """Every interior vertex has degree >= 8 or a pure Z label of length 3..6."""
    for v in d.interior_vertices():
        q = d.degree(v)
        if q >= 8:
            continue
        lab = vertex_label(d, v)
        if not (3 <= q <= 6 and lab == "Z" * q):
            return False, f"interior vertex {v} has degree {q} and label {lab}"
    return True, "every interior vertex has degree >= 8 or label Z^d with 3 <= d <= 6"


def lane_curvature(d: VanKampenDiagram, ls: LaneSet) -> LaneCurvature:
    rep = curvature_report(d)
    kap, avg = [], []
    for e in ls.elements:
        s = sum((rep.faces[f] for f in e.faces), Fraction(0))
        kap.append(s)
        avg.append(s / len(e.faces))
    kmax = max(avg) if avg else None
    ok, reason = lane_hypothesis(d)
    verdict = None
    if ok:
        verdict = kmax is None or kmax <= -1
    return LaneCurvature(kap, avg, kmax, ok, reason, verdict, rep.face_sum(), rep.interior_sum())
