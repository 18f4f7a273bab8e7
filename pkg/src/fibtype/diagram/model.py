"""Van Kampen diagrams over P_n(m, k) as combinatorial disk maps.

A diagram is a set of vertices, directed edges labelled by generators,
faces given as cyclic sequences of darts, and the boundary given as the
cycle of the outer face.  A dart is ``(edge id, +1)`` (along the edge) or
``(edge id, -1)`` (against it); it reads the letter x_gen or its inverse.

Every dart occurs exactly once among the faces and the boundary, so each
edge is used twice with opposite signs.  Faces may read a relator or its
inverse, depending on which way round they are listed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from ..words import Letter, Word, fib_word

Dart = tuple[int, int]

ERROR_CODES = (
    "malformed", "edge-incidence", "non-simple-boundary", "rotation-system",
    "euler-characteristic", "disconnected", "face-label",
)


class DiagramError(ValueError):
    def __init__(self, code: str, message: str):
        assert code in ERROR_CODES, code
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int
    gen: int


@dataclass(frozen=True)
class Corner:
    face: int
    index: int      # position in the face cycle of the dart leaving the corner
    vertex: int
    type: str       # "X", "Y" or "Z"


@dataclass
class VanKampenDiagram:
    n: int
    m: int
    k: int
    vertices: tuple[int, ...]
    edges: dict[int, Edge]
    faces: dict[int, tuple[Dart, ...]]
    boundary: tuple[Dart, ...]
    base: int | None = None
    positions: dict[int, tuple[float, float]] | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    # ------------------------------------------------------------ darts
    def tail(self, d: Dart) -> int:
        e = self.edges[d[0]]
        return e.tail if d[1] > 0 else e.head

    def head(self, d: Dart) -> int:
        e = self.edges[d[0]]
        return e.head if d[1] > 0 else e.tail

    def label(self, d: Dart) -> Letter:
        return Letter(self.edges[d[0]].gen, d[1])

    def face_word(self, fid: int) -> Word:
        return Word(self.n, [self.label(d) for d in self.faces[fid]])

    # ------------------------------------------------------------ derived structure
    def boundary_vertices(self) -> list[int]:
        return [self.tail(d) for d in self.boundary]

    def interior_vertices(self) -> list[int]:
        on_boundary = set(self.boundary_vertices())
        return [v for v in self.vertices if v not in on_boundary]

    def degree(self, v: int) -> int:
        return self._degrees().get(v, 0)

    def _degrees(self) -> dict[int, int]:
        if "deg" not in self._cache:
            deg: dict[int, int] = {}
            for e in self.edges.values():
                deg[e.tail] = deg.get(e.tail, 0) + 1
                deg[e.head] = deg.get(e.head, 0) + 1
            self._cache["deg"] = deg
        return self._cache["deg"]

    def dart_owner(self) -> dict[Dart, tuple[int | None, int]]:
        """dart -> (face id or None for the boundary, position)."""
        if "owner" not in self._cache:
            own: dict[Dart, tuple[int | None, int]] = {}
            for fid, cyc in self.faces.items():
                for i, d in enumerate(cyc):
                    own[d] = (fid, i)
            for i, d in enumerate(self.boundary):
                own[d] = (None, i)
            self._cache["owner"] = own
        return self._cache["owner"]

    def face_neighbours(self, fid: int) -> list[int | None]:
        """Face across each dart of fid, in cycle order (None across a boundary edge)."""
        own = self.dart_owner()
        return [own[(e, -s)][0] for e, s in self.faces[fid]]

    def boundary_faces(self) -> set[int]:
        own = self.dart_owner()
        return {own[(e, -s)][0] for e, s in self.boundary}

    def next_dart(self, d: Dart) -> Dart:
        fid, i = self.dart_owner()[d]
        cyc = self.boundary if fid is None else self.faces[fid]
        return cyc[(i + 1) % len(cyc)]

    def rotation(self, v: int) -> list[Dart]:
        """Darts leaving v in rotational order (sigma(d) = next dart after reverse(d))."""
        out = [d for d in self.dart_owner() if self.tail(d) == v]
        if not out:
            return []
        # start right after the outer face for boundary vertices
        start = out[0]
        for d in out:
            if self.dart_owner()[d][0] is None:
                start = d
                break
        seq = [start]
        d = self.next_dart((start[0], -start[1]))
        while d != start and len(seq) <= len(out):
            seq.append(d)
            d = self.next_dart((d[0], -d[1]))
        return seq

    # ------------------------------------------------------------ corners
    def corners(self) -> list[Corner]:
        if "corners" not in self._cache:
            out = []
            for fid, cyc in self.faces.items():
                L = len(cyc)
                for i in range(L):
                    d_in, d_out = cyc[i - 1], cyc[i]
                    out.append(Corner(fid, i, self.tail(d_out), corner_type(d_in[1], d_out[1])))
            self._cache["corners"] = out
        return self._cache["corners"]

    def corner_map(self) -> dict[tuple[int, int], Corner]:
        return {(c.face, c.index): c for c in self.corners()}

    def corner_at(self, fid: int, v: int) -> Corner:
        for c in self.corners():
            if c.face == fid and c.vertex == v:
                return c
        raise KeyError((fid, v))

    def to_dict(self) -> dict:
        d = {
            "n": self.n, "m": self.m, "k": self.k,
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "from": e.tail, "to": e.head, "gen": e.gen} for e in self.edges.values()],
            "faces": [{"id": fid, "cycle": [dart_ref(x) for x in cyc]} for fid, cyc in self.faces.items()],
            "boundary": [dart_ref(x) for x in self.boundary],
        }
        if self.base is not None:
            d["base"] = self.base
        if self.positions:
            d["positions"] = {str(v): list(p) for v, p in self.positions.items()}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def corner_type(sign_in: int, sign_out: int) -> str:
    """Type of the corner between an incoming and an outgoing dart of a face.

    Both edges pointing away from the corner is Z, both pointing in is Y,
    and one in, one out is X.
    """
    if sign_in < 0 < sign_out:
        return "Z"
    if sign_out < 0 < sign_in:
        return "Y"
    return "X"


def dart_ref(d: Dart) -> str:
    return f"{'+' if d[1] > 0 else '-'}{d[0]}"


def parse_dart(ref) -> Dart:
    if isinstance(ref, bool):
        raise DiagramError("malformed", f"bad dart reference {ref!r}")
    if isinstance(ref, int):
        return (abs(ref), -1 if ref < 0 else 1)
    if isinstance(ref, str) and len(ref) >= 2 and ref[0] in "+-" and ref[1:].isdigit():
        return (int(ref[1:]), 1 if ref[0] == "+" else -1)
    raise DiagramError("malformed", f"bad dart reference {ref!r} (expected '+E' or '-E')")


# ---------------------------------------------------------------- parsing

def from_dict(doc: dict) -> VanKampenDiagram:
    try:
        n, m, k = int(doc["n"]), int(doc["m"]), int(doc["k"])
        vertices = tuple(int(v) for v in doc["vertices"])
        edges = {}
        for e in doc["edges"]:
            edge = Edge(int(e["id"]), int(e["from"]), int(e["to"]), int(e["gen"]))
            if edge.id in edges:
                raise DiagramError("malformed", f"duplicate edge id {edge.id}")
            edges[edge.id] = edge
        faces = {}
        for f in doc["faces"]:
            fid = int(f["id"])
            if fid in faces:
                raise DiagramError("malformed", f"duplicate face id {fid}")
            faces[fid] = tuple(parse_dart(r) for r in f["cycle"])
        boundary = tuple(parse_dart(r) for r in doc["boundary"])
        base = doc.get("base")
        positions = doc.get("positions")
        if positions is not None:
            positions = {int(v): (float(p[0]), float(p[1])) for v, p in positions.items()}
    except DiagramError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramError("malformed", f"missing or ill-typed field: {exc}") from None
    return VanKampenDiagram(n, m, k, vertices, edges, faces, boundary,
                            None if base is None else int(base), positions)


def parse(text: str) -> VanKampenDiagram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError("malformed", f"not a JSON document: {exc}") from None
    if not isinstance(doc, dict):
        raise DiagramError("malformed", "top level must be an object")
    return from_dict(doc)


def parse_and_validate(text: str) -> VanKampenDiagram:
    d = parse(text)
    validate(d)
    return d


# ---------------------------------------------------------------- validation

def _relator_rotations(n: int, m: int, k: int) -> set[tuple[Letter, ...]]:
    out = set()
    for i in range(n):
        r = fib_word(n, m, k)
        r = Word(n, [Letter((a.generator + i) % n, a.sign) for a in r])
        for s in (r, r.inverse()):
            for rot in s.rotations():
                out.add(rot.letters)
    return out


def validate(d: VanKampenDiagram) -> None:
    """Raise DiagramError on the first violated invariant."""
    if d.n < 2 or not (0 <= d.m < d.n and 0 <= d.k < d.n):
        raise DiagramError("malformed", f"bad parameters n={d.n}, m={d.m}, k={d.k}")
    vset = set(d.vertices)
    if len(vset) != len(d.vertices):
        raise DiagramError("malformed", "duplicate vertex id")
    for e in d.edges.values():
        if e.tail not in vset or e.head not in vset:
            raise DiagramError("malformed", f"edge {e.id} has an unknown endpoint")
        if not 0 <= e.gen < d.n:
            raise DiagramError("malformed", f"edge {e.id} generator {e.gen} out of range")
    if d.base is not None and d.base not in vset:
        raise DiagramError("malformed", f"base vertex {d.base} is not a vertex")
    if not d.faces:
        raise DiagramError("malformed", "a diagram needs at least one face")
    if not d.boundary:
        raise DiagramError("malformed", "empty boundary")
    cycles = [(f"face {fid}", cyc) for fid, cyc in d.faces.items()] + [("boundary", d.boundary)]
    for name, cyc in cycles:
        if not cyc:
            raise DiagramError("malformed", f"{name} is empty")
        for e, _ in cyc:
            if e not in d.edges:
                raise DiagramError("malformed", f"{name} refers to unknown edge {e}")

    # each dart once, and consecutive darts chain head-to-tail
    seen: dict[Dart, str] = {}
    for name, cyc in cycles:
        for i, x in enumerate(cyc):
            if x in seen:
                raise DiagramError("edge-incidence", f"dart {dart_ref(x)} used by both {seen[x]} and {name}")
            seen[x] = name
            nxt = cyc[(i + 1) % len(cyc)]
            if d.head(x) != d.tail(nxt):
                raise DiagramError("edge-incidence", f"{name}: {dart_ref(x)} does not chain into {dart_ref(nxt)}")
    for eid in d.edges:
        for s in (1, -1):
            if (eid, s) not in seen:
                raise DiagramError("edge-incidence", f"edge {eid} is not used with sign {'+' if s > 0 else '-'}")

    bverts = d.boundary_vertices()
    if len(set(bverts)) != len(bverts):
        raise DiagramError("non-simple-boundary", "a boundary vertex is visited more than once")

    # the link of every vertex must be a single cycle of corners
    out_darts: dict[int, int] = {}
    for x in seen:
        out_darts[d.tail(x)] = out_darts.get(d.tail(x), 0) + 1
    for v, cnt in out_darts.items():
        if len(d.rotation(v)) != cnt:
            raise DiagramError("rotation-system", f"corners around vertex {v} do not form a single cycle")

    chi = len(d.vertices) - len(d.edges) + len(d.faces)
    if chi != 1:
        raise DiagramError("euler-characteristic", f"V - E + F = {chi}, expected 1")

    adj: dict[int, set[int]] = {v: set() for v in d.vertices}
    for e in d.edges.values():
        adj[e.tail].add(e.head)
        adj[e.head].add(e.tail)
    stack, reached = [d.vertices[0]], {d.vertices[0]}
    while stack:
        v = stack.pop()
        for w in adj[v] - reached:
            reached.add(w)
            stack.append(w)
    if len(reached) != len(d.vertices):
        raise DiagramError("disconnected", "the underlying graph is not connected")

    rots = _relator_rotations(d.n, d.m, d.k)
    for fid in d.faces:
        w = d.face_word(fid)
        if w.letters not in rots:
            raise DiagramError("face-label", f"face {fid} reads {w}, not a relator rotation of P_{d.n}({d.m},{d.k})")


# ---------------------------------------------------------------- reading

def boundary_word(d: VanKampenDiagram, mirror: bool = False) -> Word:
    """Boundary label read from the base vertex (or the first boundary dart)."""
    darts = list(d.boundary)
    if d.base is not None:
        tails = [d.tail(x) for x in darts]
        if d.base in tails:
            r = tails.index(d.base)
            darts = darts[r:] + darts[:r]
    w = Word(d.n, [d.label(x) for x in darts])
    return w.inverse() if mirror else w


def is_reduced(d: VanKampenDiagram) -> bool:
    return not cancelling_pairs(d)


def cancelling_pairs(d: VanKampenDiagram) -> list[tuple[int, int, int]]:
    """(face, face, edge) for every interior edge whose two faces are mirror images across it."""
    own = d.dart_owner()
    out = []
    for eid in d.edges:
        f1, i1 = own[(eid, 1)]
        f2, i2 = own[(eid, -1)]
        if f1 is None or f2 is None or f1 == f2:
            continue
        c1, c2 = d.faces[f1], d.faces[f2]
        L1, L2 = len(c1), len(c2)
        if L1 != L2:
            continue
        a = [d.label(c1[(i1 + j) % L1]) for j in range(L1)]
        b = [d.label(c2[(i2 + j) % L2]) for j in range(L2)]
        mirrored = [a[0]] + [x.inverse() for x in reversed(b[1:])]
        if a == mirrored:
            out.append((f1, f2, eid))
    return out


def vertex_label(d: VanKampenDiagram, v: int) -> str:
    """Corner types around v in rotational order (a linear word at boundary vertices)."""
    cmap = {}
    for c in d.corners():
        cyc = d.faces[c.face]
        cmap[cyc[c.index]] = c.type
    return "".join(cmap[x] for x in d.rotation(v) if x in cmap)


def xx_violations(d: VanKampenDiagram) -> list[int]:
    bset = set(d.boundary_vertices())
    bad = []
    for v in d.vertices:
        lab = vertex_label(d, v)
        probe = lab if v in bset else lab + lab[:1]
        if len(lab) > 1 and "XX" in probe:
            bad.append(v)
    return bad


# ---------------------------------------------------------------- angles

BOUNDARY_ANGLE = Fraction(29)

AngleAssignment = dict[tuple[int, int], Fraction]


def assign_angles(d: VanKampenDiagram) -> AngleAssignment:
    """360/q at an interior vertex of degree q, 29 at every boundary corner."""
    bset = set(d.boundary_vertices())
    out: AngleAssignment = {}
    for c in d.corners():
        if c.vertex in bset:
            out[(c.face, c.index)] = BOUNDARY_ANGLE
        else:
            out[(c.face, c.index)] = Fraction(360, d.degree(c.vertex))
    return out


@dataclass
class CurvatureReport:
    faces: dict[int, Fraction]
    interior: dict[int, Fraction]
    boundary: dict[int, Fraction]

    @property
    def total(self) -> Fraction:
        return sum(self.faces.values(), Fraction(0)) + sum(self.interior.values(), Fraction(0)) \
            + sum(self.boundary.values(), Fraction(0))

    @property
    def gauss_bonnet_ok(self) -> bool:
        return self.total == 360

    def face_sum(self) -> Fraction:
        return sum(self.faces.values(), Fraction(0))

    def interior_sum(self) -> Fraction:
        return sum(self.interior.values(), Fraction(0))


def curvature_report(d: VanKampenDiagram, angles: AngleAssignment | None = None) -> CurvatureReport:
    if angles is None:
        angles = assign_angles(d)
    bset = set(d.boundary_vertices())
    face_k = {fid: Fraction(-180) for fid in d.faces}
    at_vertex: dict[int, Fraction] = {v: Fraction(0) for v in d.vertices}
    for c in d.corners():
        a = angles[(c.face, c.index)]
        face_k[c.face] += a
        at_vertex[c.vertex] += a
    interior = {v: 360 - s for v, s in at_vertex.items() if v not in bset}
    boundary = {v: 180 - s for v, s in at_vertex.items() if v in bset}
    return CurvatureReport(face_k, interior, boundary)


# ---------------------------------------------------------------- Z placement

def z_placement_check(d: VanKampenDiagram) -> list[tuple[int, int, int]]:
    """Pairs (face, neighbour, edge) where two Z corners face each other across an edge."""
    own = d.dart_owner()
    cmap = d.corner_map()
    out = set()
    for fid, cyc in d.faces.items():
        L = len(cyc)
        for i in range(L):
            c = cmap[(fid, i)]
            if c.type != "Z":
                continue
            # the edge opposite the corner at index i of a triangle is the dart at i+1
            opp = cyc[(i + 1) % L]
            g, j = own[(opp[0], -opp[1])]
            if g is None or g == fid:
                continue
            gcyc = d.faces[g]
            # corner of g opposite the shared edge sits at the dart after the shared one
            u_corner = cmap[(g, (j + 2) % len(gcyc))]
            if u_corner.type == "Z":
                out.add((min(fid, g), max(fid, g), opp[0]))
    return sorted(out)


def single_face(n: int, m: int, k: int) -> VanKampenDiagram:
    """The one-face diagram whose boundary reads the relator x_0 x_m x_k^-1."""
    edges = {0: Edge(0, 0, 1, 0), 1: Edge(1, 1, 2, m % n), 2: Edge(2, 0, 2, k % n)}
    boundary = ((0, 1), (1, 1), (2, -1))
    faces = {0: ((2, 1), (1, -1), (0, -1))}
    return VanKampenDiagram(n, m, k, (0, 1, 2), edges, faces, boundary, base=0)


def from_embedding(n: int, m: int, k: int, positions: dict[int, tuple[float, float]],
                   edges: list[tuple[int, int, int]], base: int | None = None) -> VanKampenDiagram:
    """Build a diagram from a straight-line plane drawing.

    ``edges`` holds (tail, head, gen).  Faces are traced with the face on
    the left of each dart (so they run counter-clockwise) and the single
    clockwise cycle becomes the boundary.
    """
    from math import atan2

    E = {i: Edge(i, t, h, g) for i, (t, h, g) in enumerate(edges)}
    out: dict[int, list[Dart]] = {v: [] for v in positions}
    for e in E.values():
        out[e.tail].append((e.id, 1))
        out[e.head].append((e.id, -1))

    def far(x: Dart) -> int:
        return E[x[0]].head if x[1] > 0 else E[x[0]].tail

    def angle(v: int, x: Dart) -> float:
        (x0, y0), (x1, y1) = positions[v], positions[far(x)]
        return atan2(y1 - y0, x1 - x0)

    for v in out:
        out[v].sort(key=lambda x: angle(v, x))
    seen: set[Dart] = set()
    cycles = []
    for v in out:
        for x in out[v]:
            if x in seen:
                continue
            cyc = []
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                w = far(x)
                rev = (x[0], -x[1])
                ring = out[w]
                # next dart clockwise from the reversed one keeps the face on the left
                x = ring[(ring.index(rev) - 1) % len(ring)]
            cycles.append(cyc)

    def area(cyc: list[Dart]) -> float:
        pts = [positions[E[x[0]].tail if x[1] > 0 else E[x[0]].head] for x in cyc]
        return sum(a[0] * b[1] - b[0] * a[1] for a, b in zip(pts, pts[1:] + pts[:1]))

    outer = [c for c in cycles if area(c) < 0]
    if len(outer) != 1:
        raise DiagramError("malformed", f"drawing has {len(outer)} clockwise face cycles, expected 1")
    faces = {i: tuple(c) for i, c in enumerate(c for c in cycles if area(c) > 0)}
    return VanKampenDiagram(n, m, k, tuple(sorted(positions)), E, faces, tuple(outer[0]), base,
                            dict(positions))


def split_abab_inverse(w: Word) -> tuple[Word, Word] | None:
    """Nonempty a, b with w = a b a b^-1, shortest a first, or None."""
    L = len(w)
    for p in range(1, L // 2):
        q = L // 2 - p
        if 2 * (p + q) != L or q < 1:
            continue
        a, b = w[:p], w[p:p + q]
        if w[p + q:2 * p + q] == a and w[2 * p + q:] == b.inverse():
            return a, b
    return None
