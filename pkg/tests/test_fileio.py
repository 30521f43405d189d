import pytest

from outercolor import CrossingChords, OuterplaneGraph, ParseError
from outercolor.fileio import (format_certificate, hamiltonian_embedding, parse, parse_certificate,
                               serialize)


def test_diamond_file():
    gf = parse("outerplane 4 1\n1 2 3 4\nchord 1 3\n")
    assert gf.graph == OuterplaneGraph.cycle(4, [(1, 3)])
    assert gf.precolored == {}


def test_crossing_file():
    with pytest.raises(CrossingChords):
        parse("outerplane 6 2\n1 2 3 4 5 6\nchord 1 4\nchord 2 5\n")


def test_precolor_lines_and_comments():
    gf = parse("# a diamond\nouterplane 4 1  # header\n1 2 3 4\nchord 1 3\nprecolor 2 1\nprecolor 4 1\n")
    assert gf.precolored == {2: 1, 4: 1}


@pytest.mark.parametrize("text, line", [
    ("", 0),
    ("planar 4 0\n1 2 3 4\n", 1),
    ("outerplane 4 1\n1 2 3 4\n", 1),
    ("outerplane 4 0\n1 2 3\n", 2),
    ("outerplane 4 0\n1 2 3 x\n", 2),
    ("outerplane 4 0\n1 2 3 4\nprecolor 1 5\n", 3),
    ("outerplane 4 0\n1 2 3 4\nprecolor 1 1\nprecolor 1 2\n", 4),
    ("outerplane 4 0\n1 2 3 4\nprecolor 9 1\n", 3),
    ("outerplane 4 0\n1 2 3 4\nvertex 1\n", 3),
    ("outerplane 4 0\n0 1 2 3\n", 2),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.line == line


def test_canonical_round_trip():
    text = "outerplane 6 2\n1 2 3 4 5 6\nchord 1 3\nchord 3 5\nprecolor 2 1\nprecolor 4 1\n"
    gf = parse(text)
    assert serialize(gf.graph, gf.precolored) == text


def test_serialize_renumbers_along_cycle():
    gf = parse("outerplane 4 1\n10 30 20 40\nchord 40 30\nprecolor 10 2\n")
    out = serialize(gf.graph, gf.precolored)
    assert out == "outerplane 4 1\n1 2 3 4\nchord 2 4\nprecolor 1 2\n"
    assert serialize(parse(out).graph, parse(out).precolored) == out


def test_edges_variant_recovers_cycle():
    gf = parse("graph 4 5\nedge 1 2\nedge 2 4\nedge 4 3\nedge 3 1\nedge 1 4\nprecolor 2 1\n")
    assert gf.fmt == "edges"
    assert gf.graph.n == 4 and gf.graph.triangle_count == 2
    assert gf.precolored == {2: 1}


def test_edges_variant_connected():
    gf = parse("graph 4 3\nedge 1 2\nedge 1 3\nedge 1 4\n")
    assert gf.graph is None
    assert sorted(gf.connected.order) == [1, 2, 3, 4]


def test_edges_variant_limits():
    edges = "".join(f"edge {i} {i + 1}\n" for i in range(1, 13)) + "edge 13 1\n"
    with pytest.raises(ParseError):
        parse(f"graph 13 13\n{edges}")
    with pytest.raises(ParseError):
        parse("graph 4 2\nedge 1 2\nedge 3 4\n")
    k4 = "graph 4 6\n" + "".join(f"edge {a} {b}\n" for a, b in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    with pytest.raises(ParseError):
        parse(k4)


def test_hamiltonian_embedding_rejects_crossing_only_cycles():
    # K4 minus an edge has an outerplane cycle; K2,3 has no Hamiltonian cycle at all
    assert hamiltonian_embedding([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]) is not None
    assert hamiltonian_embedding([1, 2, 3, 4, 5], [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]) is None


def test_certificate_round_trip():
    text = format_certificate({2: 1, 1: 2}, ["outcome success", "case x"])
    assert text == "coloring 1 2\ncoloring 2 1\ntrace outcome success\ntrace case x\n"
    assert parse_certificate(text) == {1: 2, 2: 1}
    with pytest.raises(ParseError):
        parse_certificate("colour 1 1\n")
