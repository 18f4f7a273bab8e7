"""Star graphs of cyclic presentations.

The star graph has a vertex for every letter x_i^{+-1} and an edge
{a, b^-1} for every cyclic 2-letter subword ab of a relator.  For the word
x_i x_{i+m} x_{i+k}^-1 the three corners give the edge types

    X: x_i^+ -- x_{i+m}^-      Y: x_i^+ -- x_{i+B}^+      Z: x_i^- -- x_{i+A}^-

A cycle here is a closed walk that never immediately reverses along the
same edge occurrence (multi-edges count as distinct).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd, inf

from .params import ParameterError, derive, has_additive_order
from .words import CyclicPresentation, Letter, Word, fib_word, relators

MAX_CYCLE_LEN = 12


class BudgetError(RuntimeError):
    """A search was asked to exceed its fixed budget."""


@dataclass(frozen=True)
class StarEdge:
    u: Letter
    v: Letter
    type: str | None      # "X", "Y", "Z" or None for untyped words
    relator: int
    corner: int


@dataclass
class StarGraph:
    n: int
    edges: list[StarEdge]
    shift_invariant: bool = True

    @property
    def vertices(self) -> list[Letter]:
        return [Letter(i, s) for s in (1, -1) for i in range(self.n)]

    def adjacency(self) -> dict[Letter, list[tuple[int, Letter]]]:
        """vertex -> [(edge id, other endpoint)], loops listed twice."""
        adj: dict[Letter, list[tuple[int, Letter]]] = {v: [] for v in self.vertices}
        for eid, e in enumerate(self.edges):
            adj[e.u].append((eid, e.v))
            adj[e.v].append((eid, e.u))
        return adj

    def type_counts(self) -> dict[str | None, int]:
        out: dict[str | None, int] = {}
        for e in self.edges:
            out[e.type] = out.get(e.type, 0) + 1
        return out


def build_star_graph(p: CyclicPresentation) -> StarGraph:
    if not p.w.is_cyclically_reduced():
        raise ValueError(f"relator {p.w} is not cyclically reduced")
    typed = p.fib_parameters() is not None
    edges = []
    for ri, r in enumerate(relators(p)):
        L = len(r)
        for j in range(L):
            a, b = r[j], r[(j + 1) % L]
            t = "XYZ"[j] if typed else None
            edges.append(StarEdge(a, b.inverse(), t, ri, j))
    return StarGraph(p.n, edges)


def fib_star_graph(n: int, m: int, k: int) -> StarGraph:
    return build_star_graph(CyclicPresentation(n, fib_word(n, m, k)))


def girth(g: StarGraph) -> float:
    """Length of a shortest cycle, or inf for a forest."""
    adj = g.adjacency()
    best = inf
    for e in g.edges:
        if e.u == e.v:
            return 1
    # the shift is a graph automorphism moving x_0^s to every x_i^s,
    # so every cycle passes through a translate of x_0^+ or x_0^-
    roots = [Letter(0, 1), Letter(0, -1)] if g.shift_invariant else list(adj)
    for root in roots:
        dist = {root: 0}
        via = {root: -1}
        q = deque([root])
        while q:
            x = q.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for eid, y in adj[x]:
                if eid == via[x]:
                    continue
                if y in dist:
                    best = min(best, dist[x] + dist[y] + 1)
                else:
                    dist[y] = dist[x] + 1
                    via[y] = eid
                    q.append(y)
    return best


# ----------------------------------------------------------------- cycles

@dataclass(frozen=True)
class CycleRecord:
    vertices: tuple[Letter, ...]
    edges: tuple[int, ...]
    type_word: str
    alpha: int        # Z edges
    beta: int         # Y edges
    has_xx: bool

    @property
    def length(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return f"len={self.length} type={self.type_word} alpha={self.alpha} beta={self.beta}"


def _canonical_word(s: str) -> str:
    if not s:
        return s
    cands = [s[i:] + s[:i] for i in range(len(s))]
    r = s[::-1]
    cands += [r[i:] + r[:i] for i in range(len(r))]
    return min(cands)


def _canonical_darts(darts: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    L = len(darts)
    rev = tuple((e, 1 - d) for e, d in reversed(darts))
    return min(seq[i:] + seq[:i] for seq in (darts, rev) for i in range(L))


def short_cycles(g: StarGraph, maxlen: int) -> list[CycleRecord]:
    """All cycles of length <= maxlen, one per rotation/reflection class, sorted."""
    if maxlen > MAX_CYCLE_LEN:
        raise BudgetError(f"maxlen {maxlen} exceeds the search budget of {MAX_CYCLE_LEN}")
    # darts: (edge id, 0) runs u -> v, (edge id, 1) runs v -> u
    out_darts: dict[Letter, list[tuple[int, int, Letter]]] = {v: [] for v in g.vertices}
    for eid, e in enumerate(g.edges):
        out_darts[e.u].append((eid, 0, e.v))
        out_darts[e.v].append((eid, 1, e.u))

    seen: set = set()
    records = []

    def emit(path, verts):
        key = _canonical_darts(tuple(path))
        if key in seen:
            return
        seen.add(key)
        types = "".join(g.edges[e].type or "?" for e, _ in key)
        # recover the vertex sequence of the canonical dart order
        vs = []
        for e, d in key:
            ed = g.edges[e]
            vs.append(ed.u if d == 0 else ed.v)
        records.append(CycleRecord(
            vertices=tuple(vs), edges=tuple(e for e, _ in key),
            type_word=_canonical_word(types) if "?" not in types else types,
            alpha=types.count("Z"), beta=types.count("Y"),
            has_xx="XX" in types + types[:1],
        ))

    for start in g.vertices:
        stack = [(start, [], [start])]
        while stack:
            v, path, verts = stack.pop()
            for eid, d, w in out_darts[v]:
                if path and path[-1][0] == eid:
                    continue
                npath = path + [(eid, d)]
                # the wrap-around step must not backtrack either
                if w == start and (len(npath) == 1 or npath[0][0] != eid):
                    emit(npath, verts)
                if len(npath) < maxlen:
                    stack.append((w, npath, verts + [w]))
    records.sort(key=lambda r: (r.length, r.type_word, r.edges))
    return records


# ---------------------------------------------------------------- pieces

def relator_closure(p: CyclicPresentation) -> list[Word]:
    """Every cyclic permutation of every relator and its inverse, one entry per position."""
    out = []
    for r in relators(p):
        for s in (r, r.inverse()):
            out.extend(s.rotations())
    return out


def _lcp(a: Word, b: Word) -> int:
    i = 0
    for x, y in zip(a, b):
        if x != y:
            break
        i += 1
    return i


@dataclass
class PieceReport:
    pieces: set[Word]
    max_length: int


def _max_overlaps(p: CyclicPresentation) -> tuple[list[Word], list[int]]:
    words = relator_closure(p)
    best = [0] * len(words)
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            c = _lcp(words[i], words[j])
            if c > best[i]:
                best[i] = c
            if c > best[j]:
                best[j] = c
    return words, best


def pieces(p: CyclicPresentation) -> PieceReport:
    words, best = _max_overlaps(p)
    found: set[Word] = set()
    for w, c in zip(words, best):
        for L in range(1, c + 1):
            found.add(w[:L])
    return PieceReport(found, max(best, default=0))


def min_piece_count(p: CyclicPresentation) -> int | None:
    """Fewest pieces any relator is a product of; None when no relator is a product of pieces."""
    words, best = _max_overlaps(p)
    index = {}
    for idx, w in enumerate(words):
        index.setdefault(w, idx)
    result = None
    for r in relators(p):
        for s in (r, r.inverse()):
            L = len(s)
            # reach[i]: fewest pieces covering s[:i]
            reach = [None] * (L + 1)
            reach[0] = 0
            for i in range(L):
                if reach[i] is None:
                    continue
                rot_best = best[index[s.rotate(i)]]
                for j in range(i + 1, min(L, i + rot_best) + 1):
                    if reach[j] is None or reach[j] > reach[i] + 1:
                        reach[j] = reach[i] + 1
            if reach[L] is not None and (result is None or reach[L] < result):
                result = reach[L]
    return result


@dataclass(frozen=True)
class SmallCancellationProfile:
    c: float          # largest p with C(p); inf when no relator is a product of pieces
    t: float          # largest q with T(q), i.e. the girth
    max_piece: int

    def satisfies(self, p: int, q: int) -> bool:
        return self.c >= p and self.t >= q


def small_cancellation_profile(p: CyclicPresentation) -> SmallCancellationProfile:
    mp = min_piece_count(p)
    return SmallCancellationProfile(
        c=inf if mp is None else mp,
        t=girth(build_star_graph(p)),
        max_piece=pieces(p).max_length,
    )


# ---------------------------------------------------------------- census

@dataclass
class CensusReport:
    n: int
    m: int
    k: int
    p: int
    cycles: list[CycleRecord]
    violations: list[CycleRecord]

    @property
    def passed(self) -> bool:
        return not self.violations


def interior_vertex_census(n: int, m: int, k: int, p: int) -> CensusReport:
    """Check that every star-graph cycle shorter than 8 is pure Z of length divisible by p."""
    if p not in (3, 4, 5):
        raise ParameterError(f"p must be 3, 4 or 5, got {p}")
    params = derive(n, m, k)
    if not has_additive_order(params.A, n, p):
        raise ParameterError(f"k={k} does not have additive order {p} mod {n}")
    if n <= 7 * p:
        raise ParameterError(f"need n > 7p = {7 * p}, got n={n}")
    if gcd(gcd(n, m), k) != 1:
        raise ParameterError("gcd(n,m,k) must be 1")
    if m == 0 or m == k:
        raise ParameterError("need m != 0 and m != k")
    cycles = short_cycles(fib_star_graph(n, m, k), 7)
    bad = [c for c in cycles if c.beta or c.type_word.count("X") or c.length % p]
    return CensusReport(n, m, k, p, cycles, bad)
