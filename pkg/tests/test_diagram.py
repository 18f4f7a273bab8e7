import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagram_factory import mirror, random_diagram, wheel
from fibtype.diagram import (DiagramError, StructuralError, ant_walk, assign_angles, boundary_word, color_faces,
                             curvature_report, forbidden_patterns, from_embedding, from_triangles, is_reduced,
                             lane_curvature, lane_decomposition, lane_shape, parse, parse_and_validate,
                             parse_disk, single_face, validate, vertex_label, xx_violations, z_placement_check)
from fibtype.diagram.coloring import BLACK, WHITE, black_white_violations, load_data
from fibtype.diagram.model import split_abab_inverse
from fibtype.words import Word, fib_word


def fixture(name):
    return parse_and_validate(load_data(name))


def code_of(text):
    with pytest.raises(DiagramError) as ei:
        parse_and_validate(text)
    return ei.value.code


# ---------------------------------------------------------------- validation

def test_single_face():
    d = single_face(10, 7, 1)
    validate(d)
    assert (len(d.vertices), len(d.edges), len(d.faces)) == (3, 3, 1)
    assert boundary_word(d) == fib_word(10, 7, 1)
    assert is_reduced(d)
    assert sorted(c.type for c in d.corners()) == ["X", "Y", "Z"]
    assert z_placement_check(d) == []


def test_face_label_error():
    doc = single_face(10, 1, 2).to_dict()
    doc.update(m=7, k=1)
    assert str(boundary_word(parse(json.dumps(doc)))) == "x0 x1 X2"
    assert code_of(json.dumps(doc)) == "face-label"


def test_error_codes():
    doc = single_face(10, 7, 1).to_dict()
    bad = dict(doc, edges=doc["edges"] + [{"id": 9, "from": 0, "to": 1, "gen": 3}])
    assert code_of(json.dumps(bad)) == "edge-incidence"
    assert code_of("{not json") == "malformed"
    assert code_of(load_data("broken.vkd")) == "euler-characteristic"


def _two_faces_at_vertex():
    # two triangles sharing only vertex 0
    edges = [(0, 0, 1, 0), (1, 1, 2, 0), (2, 0, 2, 1), (3, 0, 3, 0), (4, 3, 4, 0), (5, 0, 4, 1)]
    return {
        "n": 5, "m": 0, "k": 1, "vertices": [0, 1, 2, 3, 4],
        "edges": [{"id": i, "from": a, "to": b, "gen": g} for i, a, b, g in edges],
        "faces": [{"id": 0, "cycle": ["+2", "-1", "-0"]}, {"id": 1, "cycle": ["+5", "-4", "-3"]}],
        "boundary": ["+0", "+1", "-2", "+3", "+4", "-5"], "base": 0,
    }


def test_non_simple_boundary():
    assert code_of(json.dumps(_two_faces_at_vertex())) == "non-simple-boundary"


def test_rotation_and_connectivity():
    # a sphere of two faces hanging off a boundary vertex
    doc = single_face(5, 0, 1).to_dict()
    doc["vertices"] += [3, 4]
    doc["edges"] += [{"id": 10, "from": 0, "to": 3, "gen": 0}, {"id": 11, "from": 3, "to": 4, "gen": 0},
                     {"id": 12, "from": 0, "to": 4, "gen": 1}]
    doc["faces"] += [{"id": 5, "cycle": ["+10", "+11", "-12"]}, {"id": 6, "cycle": ["+12", "-11", "-10"]}]
    assert code_of(json.dumps(doc)) == "rotation-system"
    # a one-vertex torus on its own: Euler characteristic still 1
    doc = single_face(5, 0, 1).to_dict()
    doc["vertices"].append(3)
    doc["edges"] += [{"id": 10, "from": 3, "to": 3, "gen": 0}, {"id": 11, "from": 3, "to": 3, "gen": 0},
                     {"id": 12, "from": 3, "to": 3, "gen": 1}]
    doc["faces"] += [{"id": 5, "cycle": ["+10", "+11", "-12"]}, {"id": 6, "cycle": ["+12", "-10", "-11"]}]
    assert code_of(json.dumps(doc)) == "disconnected"


def test_json_round_trip():
    d = fixture("fig1.vkd")
    again = parse_and_validate(d.to_json())
    assert again.to_dict() == d.to_dict()


def test_integer_dart_refs():
    doc = single_face(10, 7, 1).to_dict()
    doc["boundary"] = [0, 1, "-2"]
    assert boundary_word(parse_and_validate(json.dumps(doc))) == fib_word(10, 7, 1)


# ---------------------------------------------------------------- fig1 fixture

def test_fig1():
    d = fixture("fig1.vkd")
    assert (d.n, d.m, d.k) == (10, 7, 1)
    assert is_reduced(d)
    a, b = Word.parse(10, "x0 x5"), Word.parse(10, "x1 x0 x2 x1 x3")
    w = boundary_word(d)
    assert len(w) == 14
    assert w == a * b * a * b.inverse()
    assert split_abab_inverse(w) == (a, b)
    assert boundary_word(d, mirror=True) == w.inverse()
    assert curvature_report(d).total == 360
    assert z_placement_check(d) == []
    assert xx_violations(d) == []


def test_mirror_reading():
    d = single_face(13, 2, 1)
    assert boundary_word(d, mirror=True) == fib_word(13, 2, 1).inverse()
    assert boundary_word(mirror(d)) == fib_word(13, 2, 1).inverse()


def _mirror_pair():
    # upper face reads the relator, lower face its mirror image across the x_m edge
    pos = {0: (0.5, 1), 1: (0, 0), 2: (1, 0), 3: (0.5, -1)}
    n, m, k = 10, 7, 1
    edges = [(0, 1, 0), (1, 2, m), (0, 2, k), (3, 2, k), (3, 1, 0)]
    return from_embedding(n, m, k, pos, edges, base=0)


def test_cancelling_pair():
    d = _mirror_pair()
    validate(d)
    assert not is_reduced(d)


def test_z_placement_violation():
    d = _mirror_pair()
    out = z_placement_check(d)
    assert len(out) == 1
    f, g, e = out[0]
    assert {f, g} == set(d.faces) and e == 1


# ---------------------------------------------------------------- corners, angles, curvature

def test_z3_fixture():
    d = fixture("z3.vkd")
    (v,) = d.interior_vertices()
    assert d.degree(v) == 3
    assert vertex_label(d, v) == "ZZZ"
    cd = color_faces(d)
    assert len(cd.black()) == 3 == len(d.faces)


def test_angles():
    d = wheel(14, 1, 2, 7)
    validate(d)
    a = assign_angles(d)
    centre = [c for c in d.corners() if c.vertex == 0]
    assert len(centre) == 7
    assert all(a[(c.face, c.index)] == Fraction(360, 7) for c in centre)
    assert all(a[(c.face, c.index)] == 29 for c in d.corners() if c.vertex != 0)
    d = wheel(12, 1, 2, 6)
    a = assign_angles(d)
    assert all(a[(c.face, c.index)] == 60 for c in d.corners() if c.vertex == 0)


def test_single_face_curvature():
    r = curvature_report(single_face(10, 7, 1))
    assert list(r.faces.values()) == [-93]
    assert sorted(r.boundary.values()) == [151, 151, 151]
    assert r.total == 360 and r.gauss_bonnet_ok


def test_no_interior_vertices_all_white():
    d = single_face(10, 7, 1)
    cd = color_faces(d)
    assert cd.black() == []
    assert cd.white() == [0]


def test_degree7_white_face_bound():
    d = wheel(14, 1, 2, 7)
    cd = color_faces(d)
    r = curvature_report(d)
    for f in cd.white():
        assert r.faces[f] < -24


# ---------------------------------------------------------------- patterns

@pytest.mark.parametrize("i", range(1, 6))
def test_pattern_matches(i):
    cd = parse_disk(load_data(f"fig3-{i}.cdk"))
    assert i in {p.pattern for p in forbidden_patterns(cd)}


def test_patterns_absent():
    assert forbidden_patterns(parse_disk(load_data("fig4.cdk"))) == []
    white = [{"id": t["id"], "color": WHITE, "points": t["points"]}
             for t in json.loads(load_data("fig3-5.cdk"))["triangles"]]
    assert forbidden_patterns(from_triangles(white)) == []


def test_pattern_text():
    (m, *_) = forbidden_patterns(parse_disk(load_data("fig3-1.cdk")))
    assert str(m) == "forbidden pattern #1 matched"


def test_disk_errors():
    with pytest.raises(DiagramError):
        parse_disk('{"kind": "colored-disk", "triangles": [{"id": 0, "color": "red", '
                   '"points": [[0, 0], [1, 0], [0, 1]]}]}')
    with pytest.raises(DiagramError):
        parse_disk(load_data("fig1.vkd"))


# ---------------------------------------------------------------- lanes

def test_fig4_lanes():
    cd = parse_disk(load_data("fig4.cdk"))
    left = ant_walk(cd, "B0")
    assert left.whites == ("W1", "W2") and left.type == (2, 2) and left.junction == "W2"
    right = ant_walk(cd, "B0'")
    assert right.whites == ("W1'", "W2'", "W2") and right.type == (3, 3) and right.junction == "W2"
    ls = lane_decomposition(cd)
    assert sorted(a.type for a in ls.maximal) == [(2, 2), (3, 3)]
    (e,) = ls.elements
    assert e.name == "(2,2)#(3,3)" and e.type == (5, 4)
    assert e.faces == frozenset(cd.faces)


def test_isolated_black_face():
    cd = from_triangles([{"id": 0, "color": BLACK, "points": [[0, 0], [1, 0], [0, 1]]}])
    lane = ant_walk(cd, 0)
    assert lane.type == (1, 0) and cd.is_boundary(0)
    (e,) = lane_decomposition(cd).elements
    assert e.type == (1, 0)


def test_all_white_empty():
    cd = color_faces(fixture("fig1.vkd"))
    cd.color = {f: WHITE for f in cd.faces}
    assert lane_decomposition(cd).elements == []


def test_ant_home_must_be_black():
    cd = parse_disk(load_data("fig4.cdk"))
    with pytest.raises(ValueError):
        ant_walk(cd, "W1")


def test_two_white_neighbours():
    cd = parse_disk(load_data("fig3-1.cdk"))
    cd.color = {f: WHITE if c == BLACK else BLACK for f, c in cd.color.items()}
    with pytest.raises(StructuralError):
        ant_walk(cd, "W0")


def test_z3_lanes():
    d = fixture("z3.vkd")
    ls = lane_decomposition(color_faces(d))
    lc = lane_curvature(d, ls)
    assert [e.type for e in ls.elements] == [(1, 0)] * 3
    assert lc.kappa == [-2] * 3
    assert lc.hypothesis and lc.verdict


def test_fig1_verdict_withheld():
    d = fixture("fig1.vkd")
    lc = lane_curvature(d, lane_decomposition(color_faces(d)))
    assert not lc.hypothesis and lc.verdict is None
    assert "degree 6" in lc.reason


# ---------------------------------------------------------------- properties

seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_random_diagrams(seed):
    d = random_diagram(random.Random(seed))
    assert is_reduced(d)
    r = curvature_report(d)
    assert r.total == 360
    assert all(x == 0 for x in r.interior.values())
    assert z_placement_check(d) == []
    assert xx_violations(d) == []


@settings(max_examples=100, deadline=None)
@given(seeds, st.data())
def test_random_angles(seed, data):
    d = random_diagram(random.Random(seed))
    angles = {(c.face, c.index): Fraction(data.draw(st.integers(-500, 500)), data.draw(st.integers(1, 50)))
              for c in d.corners()}
    assert curvature_report(d, angles).total == 360


@settings(max_examples=150, deadline=None)
@given(seeds, st.integers(0, 30))
def test_random_lanes(seed, steps):
    d = random_diagram(random.Random(seed), steps=steps)
    cd = color_faces(d)
    assert black_white_violations(cd) == []
    ls = lane_decomposition(cd)
    for lane in ls.lanes:
        assert lane_shape(lane) is not None
        assert len(set(lane.whites)) == len(lane.whites)
    faces = [f for e in ls.elements for f in e.faces]
    assert len(faces) == len(set(faces))
    lc = lane_curvature(d, ls)
    r = curvature_report(d)
    if lc.hypothesis:
        assert lc.verdict
        for f in cd.black():
            assert r.faces[f] <= 30
        for f in cd.white():
            assert r.faces[f] <= -45
        for e, avg in zip(ls.elements, lc.average):
            bound = {(1, 0): -2, (2, 1): -16, (3, 2): -22}.get(e.type)
            if bound is not None:
                assert avg <= bound
