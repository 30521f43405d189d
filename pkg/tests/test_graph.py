import itertools

import pytest

from naive import embedding_faces, interleave, naive_structures, triangle_class
from outercolor import (BadCycle, ChordIsCycleEdge, CrossingChords, DuplicateEdge, EnumerationSpec,
                        OuterplaneGraph, classify_triangles, detect_structures, distance,
                        enumerate_instances, faces, validate, weak_dual)
from outercolor.graph import common_neighbors, tip
from outercolor.instances import chord_sets


def test_validate_accepts_diamond(diamond):
    validate(diamond)


@pytest.mark.parametrize("cycle, chords, err", [
    ((1, 2, 3, 4, 5, 6), [(1, 4), (2, 5)], CrossingChords),
    ((1, 2, 3, 4, 5), [(1, 2)], ChordIsCycleEdge),
    ((1, 2, 3, 4, 5), [(5, 1)], ChordIsCycleEdge),
    ((1, 2, 3, 4, 5), [(1, 3), (3, 1)], DuplicateEdge),
    ((1, 2, 2, 4), [], BadCycle),
    ((1, 2), [], BadCycle),
    ((1, 2, 3, 4), [(1, 7)], BadCycle),
])
def test_validate_rejects(cycle, chords, err):
    with pytest.raises(err):
        OuterplaneGraph.build(cycle, chords)


def test_crossing_reports_the_pair():
    with pytest.raises(CrossingChords) as e:
        OuterplaneGraph.build(range(1, 7), [(1, 4), (2, 5)])
    assert set(e.value.chords) == {(1, 4), (2, 5)}


def test_nested_chords_sharing_endpoint_are_fine():
    validate(OuterplaneGraph.cycle(6, [(1, 3), (1, 5), (1, 4)]))


@pytest.mark.parametrize("n", range(4, 8))
def test_validate_matches_pairwise_interleaving(n):
    pos = {v: v for v in range(1, n + 1)}
    cands = [(a, b) for a in range(1, n + 1) for b in range(a + 2, n + 1) if (a, b) != (1, n)]
    for k in (1, 2, 3):
        for chords in itertools.combinations(cands, k):
            bad = any(interleave(c, d, pos) for c, d in itertools.combinations(chords, 2))
            try:
                OuterplaneGraph.build(range(1, n + 1), chords)
                ok = True
            except CrossingChords:
                ok = False
            assert ok != bad, chords


@pytest.mark.parametrize("n, chords, expected", [
    (4, [], [(1, 2, 3, 4)]),
    (4, [(1, 3)], [(1, 2, 3), (1, 3, 4)]),
    (6, [(1, 3), (3, 5)], [(1, 2, 3), (1, 3, 5, 6), (3, 4, 5)]),
])
def test_faces_examples(n, chords, expected):
    got = sorted(tuple(sorted(f.vertices)) for f in faces(OuterplaneGraph.cycle(n, chords)))
    assert got == sorted(expected)


@pytest.mark.parametrize("n", range(3, 10))
def test_faces_match_planar_face_walk(n):
    for chords in itertools.islice(chord_sets(n), 400):
        g = OuterplaneGraph.cycle(n, chords)
        fs = g.faces
        assert len(fs) == len(chords) + 1
        assert sum(f.length for f in fs) == n + 2 * len(chords)
        assert sorted(tuple(sorted(f.vertices)) for f in fs) == embedding_faces(list(range(1, n + 1)), chords)
        for f in fs:
            assert all(g.adjacent(a, b) for a, b in f.edges())


def test_face_boundary_edge_multiplicity():
    g = OuterplaneGraph.cycle(8, [(1, 3), (1, 5), (5, 8)])
    count = {}
    for f in g.faces:
        for e in f.edges():
            count[e] = count.get(e, 0) + 1
    for e in g.edges:
        assert count[e] == (2 if e in g.chords else 1)


@pytest.mark.parametrize("n, chords, tri, cls", [
    (4, [(1, 3)], (1, 2, 3), "marginal"),
    (6, [(1, 3), (1, 4), (1, 5)], (1, 4, 5), "striped"),
    (6, [(1, 3), (3, 5), (1, 5)], (1, 3, 5), "internal"),
])
def test_classify_examples(n, chords, tri, cls):
    info = {t.face.vertices: t for t in classify_triangles(OuterplaneGraph.cycle(n, chords))}
    t = info[tri]
    assert t.cls == cls
    assert t.outer_edge_count == {"marginal": 2, "striped": 1, "internal": 0}[cls]


def test_single_triangle_is_marginal_degenerate():
    (t,) = classify_triangles(OuterplaneGraph.cycle(3))
    assert t.cls == "marginal" and t.outer_edge_count == 3


@pytest.mark.parametrize("n", range(4, 9))
def test_classes_match_naive(n):
    for chords in chord_sets(n):
        g = OuterplaneGraph.cycle(n, chords)
        for t in g.triangles:
            assert t.cls == triangle_class(g.outer_cycle, t.face.vertices)


def test_diamond_structure(diamond):
    (d,) = detect_structures(diamond).diamonds
    assert d.shared_edge == (1, 3)
    assert set(d.diamond_vertices) == {2, 4}


def test_cake_structure():
    rep = detect_structures(OuterplaneGraph.cycle(6, [(1, 3), (3, 5)]))
    (cake,) = rep.cakes
    assert cake.common_vertex == 3
    assert cake.face.vertices == (1, 3, 5, 6)
    assert {t.vertices for t in cake.triangles} == {(1, 2, 3), (3, 4, 5)}
    assert not rep.hamburgers and not rep.diamonds


def test_hamburger_structure():
    g = OuterplaneGraph.cycle(8, [(1, 3), (1, 5), (1, 6)])
    (hb,) = detect_structures(g).hamburgers
    assert hb.marginal.vertices == (1, 2, 3)
    assert hb.other.vertices == (1, 5, 6)
    assert hb.face.vertices == (1, 3, 4, 5)


def test_listed_hamburger_example_has_three_triangles():
    # the chord set {1,3},{3,7},{4,7} on C7 closes (1,3,7) into a third triangle
    g = OuterplaneGraph.cycle(7, [(1, 3), (3, 7), (4, 7)])
    assert g.triangle_count == 3
    assert not detect_structures(g).hamburgers


@pytest.mark.parametrize("n", range(4, 10))
def test_structures_match_brute_force(n):
    for t in (1, 2):
        for g in enumerate_instances(EnumerationSpec(n, t)):
            fs = [f.vertices for f in g.faces]
            d, c, h = naive_structures(fs, g.outer_cycle)
            rep = detect_structures(g)
            assert {frozenset(x.diamond_vertices) for x in rep.diamonds} == d
            assert {(frozenset(x.triangles), x.face) for x in rep.cakes} == \
                {(frozenset(t for t in g.faces if t.vertices in pair), next(f for f in g.faces if f.vertices == face))
                 for pair, face in c}
            assert len(rep.hamburgers) == len(h)


def test_weak_dual_examples():
    assert weak_dual(OuterplaneGraph.cycle(5)).edges == ()
    assert len(weak_dual(OuterplaneGraph.cycle(4, [(1, 3)])).edges) == 1
    dual = weak_dual(OuterplaneGraph.cycle(6, [(1, 3), (3, 5)]))
    deg = {i: len(list(dual.neighbors(i))) for i in range(3)}
    middle = next(i for i, d in deg.items() if d == 2)
    assert dual.nodes[middle].length == 4


@pytest.mark.parametrize("n", range(3, 9))
def test_weak_dual_is_tree(n):
    for chords in itertools.islice(chord_sets(n), 300):
        dual = weak_dual(OuterplaneGraph.cycle(n, chords))
        assert len(dual.edges) == len(chords) == len(dual.nodes) - 1
        for i in range(len(dual.nodes)):
            assert dual.path(0, i)[-1] == i


def test_distance_and_common_neighbors(diamond):
    c5 = OuterplaneGraph.cycle(5)
    assert distance(c5, 1, 3) == 2
    assert distance(c5, 1, 1) == 0
    assert common_neighbors(diamond, 2, 4) == {1, 3}


def test_tip_and_delete_vertex():
    g = OuterplaneGraph.cycle(6, [(1, 3), (3, 5)])
    t = next(t for t in g.triangles if t.face.vertices == (1, 2, 3))
    assert tip(g, t) == 2
    h = g.delete_vertex(2)
    assert h.outer_cycle == (1, 3, 4, 5, 6)
    assert h.chords == ((3, 5),)
    assert h.triangle_count == 1
