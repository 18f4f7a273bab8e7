from math import inf

import networkx as nx
import pytest

from fibtype.classify import is_T5, t6_profile
from fibtype.params import FibParams, ParameterError
from fibtype.stargraph import (
    BudgetError,
    build_star_graph,
    fib_star_graph,
    girth,
    interior_vertex_census,
    min_piece_count,
    pieces,
    short_cycles,
    small_cancellation_profile,
)
from fibtype.words import CyclicPresentation, Letter, Word, fib_word


def girth_oracle(g) -> float:
    """Girth via networkx on the graph with every edge cut into three segments."""
    h = nx.Graph()
    for i, e in enumerate(g.edges):
        a, b = ("a", i), ("b", i)
        h.add_edges_from([(e.u, a), (a, b), (b, e.v)])
    gi = nx.girth(h)
    return inf if gi == inf else gi // 3


def test_star_graph_shape():
    for n, m, k in [(5, 1, 2), (10, 7, 1), (24, 1, 8), (7, 3, 5)]:
        g = fib_star_graph(n, m, k)
        assert len(g.vertices) == 2 * n and len(g.edges) == 3 * n
        assert g.type_counts() == {"X": n, "Y": n, "Z": n}
        adj = g.adjacency()
        assert all(len(nb) == 3 for nb in adj.values())
        p = FibParams(n, m, k)
        want = {
            "X": {frozenset((Letter(i, 1), Letter((i + m) % n, -1))) for i in range(n)},
            "Y": {frozenset((Letter(i, 1), Letter((i + p.B) % n, 1))) for i in range(n)},
            "Z": {frozenset((Letter(i, -1), Letter((i + p.A) % n, -1))) for i in range(n)},
        }
        for t, edges in want.items():
            assert {frozenset((e.u, e.v)) for e in g.edges if e.type == t} == edges


def test_edge_type_examples():
    for e in fib_star_graph(10, 7, 1).edges:
        if e.type == "Z":
            assert e.u.sign == e.v.sign == -1 and (e.v.generator - e.u.generator) % 10 in (1, 9)
    for e in fib_star_graph(5, 1, 2).edges:
        if e.type == "Y":
            assert e.u.sign == e.v.sign == 1 and (e.v.generator - e.u.generator) % 5 in (1, 4)


def test_not_cyclically_reduced():
    with pytest.raises(ValueError):
        build_star_graph(CyclicPresentation(3, Word.parse(3, "x0 x1 X0")))


def test_girth_examples():
    assert girth(fib_star_graph(8, 1, 2)) == 4
    assert girth(fib_star_graph(9, 1, 2)) >= 5
    assert girth(fib_star_graph(12, 6, 1)) >= 6


def test_girth_matches_oracle():
    for n in range(3, 16):
        for m in range(n):
            for k in range(1, n):
                if m == k:
                    continue
                g = fib_star_graph(n, m, k)
                assert girth(g) == girth_oracle(g), (n, m, k)


def test_girth_untyped_word():
    p = CyclicPresentation(6, Word.parse(6, "x0 x1 x3 X2"))
    g = build_star_graph(p)
    assert g.edges[0].type is None
    g.shift_invariant = False
    assert girth(g) == girth_oracle(g)


def test_t5_t6_against_girth_small():
    for n in range(3, 16):
        for m in range(1, n):
            for k in range(1, n):
                if m == k or FibParams(n, m, k).decomposes:
                    continue
                gi = girth(fib_star_graph(n, m, k))
                assert is_T5(n, m, k) == (gi >= 5)
                assert t6_profile(n, m, k) == (gi >= 6)


def test_pieces():
    for n, m, k in [(9, 1, 2), (10, 7, 1), (11, 4, 1)]:
        assert is_T5(n, m, k)
        assert pieces(CyclicPresentation.fibonacci_type(n, m, k)).max_length == 1
    assert pieces(CyclicPresentation(2, Word.parse(2, "x0 x1"))).max_length == 2
    single = pieces(CyclicPresentation(2, Word.parse(2, "x0")))
    assert single.pieces == set() and single.max_length == 0


def test_small_cancellation_profiles():
    assert small_cancellation_profile(CyclicPresentation.fibonacci_type(9, 1, 2)).satisfies(3, 5)
    assert small_cancellation_profile(CyclicPresentation.fibonacci_type(11, 4, 1)).t >= 6
    assert small_cancellation_profile(CyclicPresentation.fibonacci_type(8, 4, 1)).t >= 6
    assert min_piece_count(CyclicPresentation(2, Word.parse(2, "x0 x1"))) == 1


def simple_cycle_types(g, maxlen):
    """Type words of simple cycles (no repeated vertex) by networkx, one per cycle."""
    h = nx.MultiGraph()
    for i, e in enumerate(g.edges):
        h.add_edge(e.u, e.v, key=i, type=e.type)
    out = []
    for cyc in nx.simple_cycles(nx.Graph(h), length_bound=maxlen):
        L = len(cyc)
        types = "".join(sorted(next(iter(h[cyc[i]][cyc[(i + 1) % L]].values()))["type"] for i in range(L)))
        out.append(types)
    return sorted(out)


@pytest.mark.parametrize("n,m,k,lengths", [(24, 1, 8, {3, 6}), (36, 1, 9, {4}), (40, 1, 8, {5})])
def test_short_cycles_pure_z(n, m, k, lengths):
    cyc = short_cycles(fib_star_graph(n, m, k), 7)
    assert cyc and all(set(c.type_word) == {"Z"} for c in cyc)
    assert {c.length for c in cyc} == lengths
    simple = [c for c in cyc if len(set(c.vertices)) == c.length]
    assert sorted("".join(sorted(c.type_word)) for c in simple) == simple_cycle_types(fib_star_graph(n, m, k), 7)


def test_short_cycles_record_format():
    cyc = short_cycles(fib_star_graph(24, 1, 8), 7)
    assert [str(c) for c in cyc] == ["len=3 type=ZZZ alpha=3 beta=0"] * 8 + ["len=6 type=ZZZZZZ alpha=6 beta=0"] * 8
    assert not any(c.has_xx for c in cyc)


def test_short_cycles_budget():
    with pytest.raises(BudgetError):
        short_cycles(fib_star_graph(24, 1, 8), 13)


@pytest.mark.parametrize("n,m,k,p", [(24, 1, 8, 3), (32, 1, 8, 4), (40, 3, 8, 5)])
def test_census_pass(n, m, k, p):
    assert interior_vertex_census(n, m, k, p).passed


def test_census_preconditions():
    with pytest.raises(ParameterError):
        interior_vertex_census(21, 1, 7, 3)     # n = 7p
    with pytest.raises(ParameterError):
        interior_vertex_census(24, 1, 6, 3)     # order of 6 mod 24 is 4
    with pytest.raises(ParameterError):
        interior_vertex_census(24, 1, 8, 6)


def test_short_cycles_multi_edge():
    # x_0 x_1 x_0^-1 style words are not cyclically reduced; use a word with a repeated corner
    g = build_star_graph(CyclicPresentation(4, fib_word(4, 0, 1)))
    assert girth(g) == girth_oracle(g)
    assert short_cycles(g, 4)[0].length == girth(g)
