import itertools

import pytest

from outercolor import (EnumerationSpec, OuterplaneGraph, algorithm1, all_tables, apply_hom,
                        complete_by_hom, decompose_to_small_faces, enumerate_instances, face_chain,
                        hom_table, oracle_extend)
from outercolor.errors import AdjustmentFailed, InconsistentAnchor, PreconditionViolated
from outercolor.graph import Face
from outercolor.homcolor import PRECEDENCE, SWAPS, HomColoring, color_face


@pytest.mark.parametrize("map_id, table", [
    ("f1", "XYZY"), ("f2", "XZYZ"), ("f3", "XYXZ"), ("f4", "XYXY"), ("f5", "XZXZ"), ("f6", "XZXY"),
    ("F1", "XZYZY"), ("F2", "XZYXY"), ("F3", "YZXZX"),
])
def test_tables(map_id, table):
    hm = hom_table(map_id)
    assert "".join(hm.table) == table
    assert hm.arity == len(table)


def test_tables_are_homomorphisms_into_k3():
    assert len(all_tables()) == 9
    for hm in all_tables():
        k = hm.arity
        assert all(hm.table[i] != hm.table[(i + 1) % k] for i in range(k))


def test_unknown_table():
    with pytest.raises(ValueError):
        hom_table("f7")


def test_pentagon_read_against_boundary():
    # a,b,c,d,e -> x,y,z,y,z: F1 read from a against the boundary order
    face = Face(("a", "b", "c", "d", "e"))
    psi = apply_hom(face, "F1", "a", "ccw")
    assert [psi.assignment[v] for v in "abcde"] == list("XYZYZ")


def test_apply_fresh_face():
    face = Face((1, 2, 3, 4))
    psi = apply_hom(face, "f1", 1, "cw")
    assert [psi.assignment[v] for v in face] == list("XYZY")


def test_apply_prefix_match():
    face = Face((1, 2, 3, 4))
    psi = apply_hom(face, "f1", partial=HomColoring({1: "X", 2: "Y"}))
    assert [psi.assignment[v] for v in face] == list("XYZY")


def test_apply_improper_edge():
    with pytest.raises(InconsistentAnchor):
        apply_hom(Face((1, 2, 3, 4)), "f1", partial=HomColoring({1: "X", 2: "X"}))


def test_apply_arity_mismatch():
    with pytest.raises(PreconditionViolated):
        apply_hom(Face((1, 2, 3, 4, 5)), "f1", 1, "cw")


def test_previous_colors_never_change():
    face = Face((1, 2, 3, 4, 5))
    fixed = {3: "Y", 4: "X"}
    psi = apply_hom(face, "F2", partial=HomColoring(dict(fixed)))
    assert all(psi.assignment[v] == c for v, c in fixed.items())


def test_swaps_are_documented_pairs():
    assert SWAPS == {"f1": ("f3", "f4"), "f2": ("f5", "f6"), "F1": ("F3", "F2")}
    assert PRECEDENCE[4] == ("f1", "f2", "f3", "f4", "f5", "f6")


def test_face_chain_example():
    h = OuterplaneGraph.cycle(6, [(1, 3), (3, 5)])
    ch = face_chain(h, 2, 4)
    assert [f.vertices for f in ch.faces] == [(1, 2, 3), (1, 3, 5, 6), (3, 4, 5)]
    assert ch.entry_edges == ((1, 3), (3, 5))
    assert ch.k == 3


def test_face_chain_single_face():
    assert face_chain(OuterplaneGraph.cycle(5), 1, 3).k == 1


def test_face_chain_fan_of_squares():
    h = OuterplaneGraph.cycle(8, [(1, 4), (1, 6)])
    ch = face_chain(h, 2, 7)
    assert ch.k == 3 and all(f.length in (4, 3) for f in ch.faces)


def test_single_pentagon_always_matches():
    h = OuterplaneGraph.cycle(5)
    for u, v in [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]:
        psi = algorithm1(h, u, v)
        assert psi.assignment[u] == psi.assignment[v]


def test_two_squares_no_adjustment():
    h = OuterplaneGraph.cycle(6, [(1, 4)])
    psi = algorithm1(h, 2, 6)
    assert psi.assignment[2] == psi.assignment[6] == "Y"
    assert [m.map_id for m in psi.maps_used] == ["f1", "f1"]


def test_two_squares_swap_f1_to_f3():
    # f1 on (1,2,3,4) gives 2 and 4 the same letter, which blocks v=5
    h = OuterplaneGraph.cycle(6, [(1, 4)])
    psi = algorithm1(h, 2, 5)
    assert psi.assignment[2] == psi.assignment[5] == "Y"
    assert psi.maps_used[0].map_id == "f3"


def test_requires_nonadjacent_and_small_faces():
    with pytest.raises(PreconditionViolated):
        algorithm1(OuterplaneGraph.cycle(5), 1, 2)
    with pytest.raises(PreconditionViolated):
        algorithm1(OuterplaneGraph.cycle(7), 1, 3)


def test_color_face_triangle_completion():
    psi = HomColoring({1: "X", 2: "Z"})
    assert color_face(Face((1, 2, 3)), psi)
    assert psi.assignment[3] == "Y"


def test_to_colors_permutation():
    psi = HomColoring({1: "X", 2: "Y", 3: "Z"})
    assert psi.to_colors() == {1: 1, 2: 2, 3: 3}
    assert psi.to_colors("Y", 1) == {1: 2, 2: 1, 3: 3}


def _proper_on(h, col):
    return all(col[a] != col[b] for a, b in h.edges if a in col and b in col)


@pytest.mark.parametrize("n", range(4, 10))
def test_postcondition_exhaustive(n):
    """Whenever algorithm1 returns, psi(u)=psi(v), the chain coloring is proper,
    the oracle can extend it and table completion finishes it."""
    stats = {"ok": 0, "failed": 0}
    for t in (0, 1, 2):
        for g in enumerate_instances(EnumerationSpec(n, t)):
            for u, v in itertools.combinations(g.vertices, 2):
                if g.adjacent(u, v):
                    continue
                h = decompose_to_small_faces(g, [(u, v)]).h
                try:
                    psi = algorithm1(h, u, v)
                except AdjustmentFailed:
                    stats["failed"] += 1
                    continue
                stats["ok"] += 1
                assert psi.assignment[u] == psi.assignment[v]
                col = psi.to_colors()
                assert _proper_on(h, col)
                assert oracle_extend(h, col) is not None
                total = complete_by_hom(h, psi).to_colors()
                assert set(total) == set(h.vertices) and _proper_on(h, total)
    assert stats["ok"] > stats["failed"]
