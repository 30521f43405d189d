import itertools

from hypothesis import assume, given, settings, strategies as st

from outercolor import (ExtensionInstance, check_coloring, count_extensions,
                        decompose_to_small_faces, extend, random_instance, weak_dual)
from outercolor.fileio import parse, serialize

graphs = st.builds(random_instance, st.integers(8, 40), st.integers(0, 2), st.integers(0, 2 ** 32 - 1))


@st.composite
def instances(draw):
    g = draw(graphs)
    k = 3 if g.triangle_count <= 1 and draw(st.booleans()) else 2
    verts = draw(st.lists(st.sampled_from(g.vertices), min_size=k, max_size=k, unique=True))
    assume(not any(g.adjacent(a, b) for a, b in itertools.combinations(verts, 2)))
    cols = draw(st.lists(st.sampled_from((1, 2, 3)), min_size=k, max_size=k))
    return g, dict(zip(verts, cols))


@given(graphs)
def test_face_and_dual_counts(g):
    assert len(g.faces) == len(g.chords) + 1
    assert sum(f.length for f in g.faces) == g.n + 2 * len(g.chords)
    assert len(weak_dual(g).edges) == len(g.chords)


@given(graphs, st.data())
def test_decomposition_invariants(g, data):
    u = data.draw(st.sampled_from(g.vertices))
    v = data.draw(st.sampled_from([w for w in g.vertices if w != u and not g.adjacent(u, w)]))
    res = decompose_to_small_faces(g, [(u, v)])
    assert all(f.length <= 5 for f in res.h.faces)
    assert res.h.triangle_count == g.triangle_count
    assert not res.h.adjacent(u, v)
    assert decompose_to_small_faces(res.h, [(u, v)]).h == res.h


@settings(max_examples=150, deadline=None)
@given(instances())
def test_extend_agrees_with_oracle(inst):
    g, pre = inst
    res = extend(ExtensionInstance(g, pre))
    feasible = count_extensions(g, pre) > 0
    if res.outcome == "success":
        assert check_coloring(g, res.coloring, pre) is None
    else:
        assert res.outcome == "infeasible" and not feasible


@given(graphs)
def test_serialize_round_trip(g):
    text = serialize(g)
    again = parse(text).graph
    assert again == g
    assert serialize(again) == text
