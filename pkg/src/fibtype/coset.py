"""Todd-Coxeter coset enumeration.

Two definition strategies share one coset table (Felsch is the default):

* ``"hlt"``: scan-and-fill every relator at every coset in order, fill rows,
  and run a lookahead pass (scanning without defining) each time the number
  of defined cosets crosses a doubling threshold;
* ``"felsch"``: define one entry at a time in row-major order and close every
  consequence through a deduction stack before defining again.

Coincidences are merged with a union-find over coset numbers (smaller number
wins), queueing dead cosets and transferring their rows.  Dead cosets keep
their numbers; nothing is compacted during the run, so ``max_cosets`` bounds
every coset ever defined.

Columns are 2g (x_g) and 2g+1 (x_g^-1); cosets are numbered from 1 and 0
means "undefined".
"""
from __future__ import annotations

import logging
from array import array
from dataclasses import dataclass
from typing import Sequence

from .words import CyclicPresentation, Word, fib_word, relators

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Closed:
    order: int


@dataclass(frozen=True)
class Overflow:
    limit: int


@dataclass(frozen=True)
class CosetResult:
    outcome: Closed | Overflow
    defined: int
    coincidences: int
    table: CosetTable | None = None

    @property
    def closed(self) -> bool:
        return isinstance(self.outcome, Closed)


class _Full(Exception):
    pass


def _columns(word: Word) -> list[int]:
    return [2 * a.generator + (0 if a.sign == 1 else 1) for a in word]


class CosetTable:
    """Coset table with union-find coincidence handling."""

    def __init__(self, ngens: int, max_cosets: int):
        if max_cosets < 1:
            raise ValueError("max_cosets must be at least 1")
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.cols = [array("i", [0, 0]) for _ in range(self.ncols)]
        self.parent = array("i", [0, 1])
        self.defined = 1      # cosets ever defined (live + dead)
        self.dead = 0
        self.coincidences = 0

    # ---------------------------------------------------------- basics
    @property
    def live(self) -> int:
        return self.defined - self.dead

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def new_coset(self) -> int:
        if self.defined >= self.max_cosets:
            raise _Full
        self.defined += 1
        c = self.defined
        for col in self.cols:
            col.append(0)
        self.parent.append(c)
        return c

    def define(self, c: int, x: int) -> int:
        d = self.new_coset()
        self.cols[x][c] = d
        self.cols[x ^ 1][d] = c
        return d

    def rep(self, c: int) -> int:
        p = self.parent
        r = c
        while p[r] != r:
            r = p[r]
        while p[c] != r:
            p[c], c = r, p[c]
        return r

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.dead += 1
        queue.append(b)

    def coincidence(self, a: int, b: int, deductions: list | None = None) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        cols = self.cols
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            self.coincidences += 1
            for x in range(self.ncols):
                cx = cols[x]
                d = cx[g]
                if not d:
                    continue
                xi = x ^ 1
                cxi = cols[xi]
                cxi[d] = 0
                mu, nu = self.rep(g), self.rep(d)
                if cx[mu]:
                    self._merge(nu, cx[mu], queue)
                elif cxi[nu]:
                    self._merge(mu, cxi[nu], queue)
                else:
                    cx[mu] = nu
                    cxi[nu] = mu
                    if deductions is not None:
                        deductions.append((mu, x))

    # ---------------------------------------------------------- scanning
    def scan(self, c: int, w: Sequence[int], fill: bool, deductions: list | None = None) -> None:
        """Trace w from c forwards and backwards, deducing, merging, or (when fill) defining."""
        cols = self.cols
        f, i = c, 0
        b, j = c, len(w) - 1
        while True:
            while i <= j:
                nxt = cols[w[i]][f]
                if not nxt:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c, deductions)
                return
            while j >= i:
                nxt = cols[w[j] ^ 1][b]
                if not nxt:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b, deductions)
                return
            if i == j:
                x = w[i]
                cols[x][f] = b
                cols[x ^ 1][b] = f
                if deductions is not None:
                    deductions.append((f, x))
                return
            if not fill:
                return
            self.define(f, w[i])

    # ---------------------------------------------------------- results
    def live_cosets(self) -> list[int]:
        return [c for c in range(1, self.defined + 1) if self.parent[c] == c]

    def compacted(self) -> list[list[int]]:
        """Rows of the live cosets renumbered 0..live-1 (only meaningful once closed)."""
        live = self.live_cosets()
        index = {c: i for i, c in enumerate(live)}
        return [[index[self.rep(self.cols[x][c])] for x in range(self.ncols)] for c in live]

    def is_closed(self, rels: list[list[int]]) -> bool:
        cols = self.cols
        for c in self.live_cosets():
            for x in range(self.ncols):
                d = cols[x][c]
                if not d or self.parent[d] != d or cols[x ^ 1][d] != c:
                    return False
            for w in rels:
                f = c
                for x in w:
                    f = cols[x][f]
                if f != c:
                    return False
        return True


def _hlt(t: CosetTable, rels: list[list[int]], lookahead: bool) -> None:
    next_lookahead = 4096
    c = 1
    while c <= t.defined:
        if t.is_live(c):
            for w in rels:
                t.scan(c, w, fill=True)
                if not t.is_live(c):
                    break
            if t.is_live(c):
                for x in range(t.ncols):
                    if not t.cols[x][c]:
                        t.define(c, x)
        c += 1
        if lookahead and t.defined >= next_lookahead:
            _lookahead(t, rels)
            next_lookahead *= 2
            log.info("lookahead: defined=%d live=%d", t.defined, t.live)


def _lookahead(t: CosetTable, rels: list[list[int]]) -> None:
    for c in range(1, t.defined + 1):
        if not t.is_live(c):
            continue
        for w in rels:
            t.scan(c, w, fill=False)
            if not t.is_live(c):
                break


def _felsch(t: CosetTable, rels: list[list[int]]) -> None:
    # every cyclic conjugate of every relator and its inverse, grouped by first column
    by_first: dict[int, list[list[int]]] = {x: [] for x in range(t.ncols)}
    seen = set()
    for w in rels:
        for v in (w, [x ^ 1 for x in reversed(w)]):
            for r in range(len(v)):
                rot = tuple(v[r:] + v[:r])
                if rot not in seen:
                    seen.add(rot)
                    by_first[rot[0]].append(list(rot))
    cols = t.cols
    deductions: list[tuple[int, int]] = []

    def process():
        while deductions:
            c, x = deductions.pop()
            for w in by_first[x]:
                if t.is_live(c):
                    t.scan(c, w, fill=False, deductions=deductions)
            d = cols[x][c] if t.is_live(c) else 0
            if d and t.is_live(d):
                for w in by_first[x ^ 1]:
                    if t.is_live(d):
                        t.scan(d, w, fill=False, deductions=deductions)

    for c0 in range(1, t.defined + 1):
        for w in rels:
            if t.is_live(c0):
                t.scan(c0, w, fill=False, deductions=deductions)
    process()
    c = 1
    while c <= t.defined:
        for x in range(t.ncols):
            if not t.is_live(c):
                break
            if not cols[x][c]:
                t.define(c, x)
                deductions.append((c, x))
                process()
        c += 1


def enumerate_cosets(p: CyclicPresentation, subgroup: Sequence[Word] = (), max_cosets: int = 10**6,
                     strategy: str = "felsch", lookahead: bool = True, keep_table: bool = False) -> CosetResult:
    """Enumerate the cosets of the subgroup generated by ``subgroup`` in G_n(w)."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    if strategy not in ("hlt", "felsch"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rels = [_columns(r) for r in relators(p)]
    rels = [w for w in rels if w]
    t = CosetTable(p.n, max_cosets)
    try:
        for h in subgroup:
            hw = _columns(h)
            if hw:
                t.scan(1, hw, fill=True)
        if strategy == "hlt":
            _hlt(t, rels, lookahead)
        else:
            _felsch(t, rels)
    except _Full:
        log.info("overflow after defining %d cosets", t.defined)
        return CosetResult(Overflow(max_cosets), t.defined, t.coincidences)
    log.info("closed: defined=%d live=%d coincidences=%d", t.defined, t.live, t.coincidences)
    return CosetResult(Closed(t.live), t.defined, t.coincidences, t if keep_table else None)


@dataclass(frozen=True)
class UnknownOrder:
    limit: int


def group_order(n: int, m: int, k: int, max_cosets: int = 10**6, strategy: str = "felsch") -> int | UnknownOrder:
    res = enumerate_cosets(CyclicPresentation(n, fib_word(n, m, k)), (), max_cosets, strategy)
    if isinstance(res.outcome, Closed):
        return res.outcome.order
    return UnknownOrder(max_cosets)
