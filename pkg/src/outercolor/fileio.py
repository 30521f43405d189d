"""Line-oriented graph and certificate files.

Graph files come in two flavours::

    outerplane <n> <c>          graph <n> <m>
    <v1> ... <vn>               edge <a> <b>      (m lines)
    chord <a> <b>  (c lines)    precolor <v> <color>
    precolor <v> <color>

``#`` starts a comment anywhere on a line.  The edge-list flavour recovers
the outer cycle by exhaustive search, so it is limited to small graphs;
a connected graph with no outerplane Hamiltonian cycle is read as a
connected outerplane graph whose boundary order comes from a planar
embedding with an apex over the outer face.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx

from .decompose import ConnectedOuterplane
from .errors import ParseError, ValidationError
from .graph import OuterplaneGraph, edge, validate

HAMILTON_LIMIT = 12


@dataclass
class GraphFile:
    graph: Optional[OuterplaneGraph]
    precolored: dict[int, int] = field(default_factory=dict)
    # set instead of ``graph`` for connected inputs that are not biconnected
    connected: Optional[ConnectedOuterplane] = None
    fmt: str = "outerplane"


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            yield i, s.split()


def _ints(no: int, toks: list[str], k: int, what: str) -> list[int]:
    if len(toks) != k:
        raise ParseError(no, f"{what} expects {k} integers, got {len(toks)}")
    try:
        vals = [int(t) for t in toks]
    except ValueError:
        raise ParseError(no, f"{what} expects integers: {' '.join(toks)}") from None
    return vals


def _precolor(no, toks, pre):
    v, c = _ints(no, toks[1:], 2, "precolor")
    if c not in (1, 2, 3):
        raise ParseError(no, f"color {c} outside 1..3")
    if v in pre:
        raise ParseError(no, f"vertex {v} precolored twice")
    pre[v] = c


def parse(text: str) -> GraphFile:
    lines = list(_lines(text))
    if not lines:
        raise ParseError(0, "empty file")
    no, head = lines[0]
    if head[0] == "outerplane":
        return _parse_outerplane(lines)
    if head[0] == "graph":
        return _parse_edges(lines)
    raise ParseError(no, f"unknown header {head[0]!r}")


def _parse_outerplane(lines) -> GraphFile:
    no, head = lines[0]
    n, c = _ints(no, head[1:], 2, "outerplane header")
    if len(lines) < 2:
        raise ParseError(no, "missing cycle line")
    cno, ctoks = lines[1]
    cycle = _ints(cno, ctoks, n, "cycle line")
    if any(v <= 0 for v in cycle):
        raise ParseError(cno, "vertex labels must be positive")
    chords, pre = [], {}
    for no, toks in lines[2:]:
        if toks[0] == "chord":
            chords.append(tuple(_ints(no, toks[1:], 2, "chord")))
        elif toks[0] == "precolor":
            _precolor(no, toks, pre)
        else:
            raise ParseError(no, f"unexpected keyword {toks[0]!r}")
    if len(chords) != c:
        raise ParseError(lines[0][0], f"header announces {c} chords, found {len(chords)}")
    g = OuterplaneGraph.build(cycle, chords)
    _check_precolored(g.vertices, pre, lines)
    return GraphFile(g, pre)


def _check_precolored(vertices, pre, lines):
    known = set(vertices)
    for v in pre:
        if v not in known:
            no = next(no for no, t in lines if t[0] == "precolor" and int(t[1]) == v)
            raise ParseError(no, f"precolored vertex {v} not in graph")


def _parse_edges(lines) -> GraphFile:
    no, head = lines[0]
    n, m = _ints(no, head[1:], 2, "graph header")
    edges, pre = [], {}
    for no, toks in lines[1:]:
        if toks[0] == "edge":
            a, b = _ints(no, toks[1:], 2, "edge")
            if a == b or a <= 0 or b <= 0:
                raise ParseError(no, f"bad edge {a} {b}")
            edges.append(edge(a, b))
        elif toks[0] == "precolor":
            _precolor(no, toks, pre)
        else:
            raise ParseError(no, f"unexpected keyword {toks[0]!r}")
    if len(edges) != m:
        raise ParseError(lines[0][0], f"header announces {m} edges, found {len(edges)}")
    if len(set(edges)) != m:
        raise ParseError(lines[0][0], "duplicate edge")
    verts = sorted({v for e in edges for v in e} | set(pre))
    if len(verts) != n:
        raise ParseError(lines[0][0], f"header announces {n} vertices, found {len(verts)}")
    if n > HAMILTON_LIMIT:
        raise ParseError(lines[0][0], f"edge-list input limited to n <= {HAMILTON_LIMIT}")
    g = hamiltonian_embedding(verts, edges)
    if g is not None:
        return GraphFile(g, pre, fmt="edges")
    return GraphFile(None, pre, connected_embedding(verts, edges, lines[0][0]), fmt="edges")


def hamiltonian_embedding(verts, edges) -> Optional[OuterplaneGraph]:
    """The lexicographically first Hamiltonian cycle whose remaining edges do not cross."""
    adj = {v: set() for v in verts}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    if len(verts) < 3:
        return None
    start = verts[0]
    path = [start]
    seen = {start}

    def rec():
        if len(path) == len(verts):
            if start in adj[path[-1]] and path[1] < path[-1]:
                cyc = {edge(path[i], path[(i + 1) % len(path)]) for i in range(len(path))}
                g = OuterplaneGraph(tuple(path), tuple(e for e in edges if e not in cyc))
                try:
                    validate(g)
                except ValidationError:
                    return None
                return g
            return None
        for w in sorted(adj[path[-1]]):
            if w not in seen:
                path.append(w)
                seen.add(w)
                g = rec()
                path.pop()
                seen.discard(w)
                if g is not None:
                    return g
        return None

    return rec()


def connected_embedding(verts, edges, line: int) -> ConnectedOuterplane:
    g = nx.Graph()
    g.add_nodes_from(verts)
    g.add_edges_from(edges)
    if not nx.is_connected(g):
        raise ParseError(line, "graph is not connected")
    apex = max(verts) + 1
    g.add_edges_from((apex, v) for v in verts)
    planar, emb = nx.check_planarity(g)
    if not planar:
        raise ParseError(line, "graph is not outerplanar")
    order = list(emb.neighbors_cw_order(apex))
    i = order.index(min(order))
    order = order[i:] + order[:i]
    return ConnectedOuterplane(tuple(order), tuple(edges))


def serialize(g: OuterplaneGraph, precolored: Optional[dict[int, int]] = None) -> str:
    """Canonical text: vertices renumbered 1..n along the cycle, chords sorted."""
    ren = {v: i + 1 for i, v in enumerate(g.outer_cycle)}
    chords = sorted(edge(ren[a], ren[b]) for a, b in g.chords)
    out = [f"outerplane {g.n} {len(chords)}", " ".join(str(i) for i in range(1, g.n + 1))]
    out += [f"chord {a} {b}" for a, b in chords]
    out += [f"precolor {ren[v]} {c}" for v, c in sorted((precolored or {}).items(), key=lambda t: ren[t[0]])]
    return "\n".join(out) + "\n"


def canonical_labels(g: OuterplaneGraph) -> dict[int, int]:
    return {v: i + 1 for i, v in enumerate(g.outer_cycle)}


# ---------------------------------------------------------------- certificates

def format_certificate(coloring: Optional[dict[int, int]], trace: list[str]) -> str:
    out = [f"coloring {v} {c}" for v, c in sorted((coloring or {}).items())]
    out += [f"trace {line}" for line in trace]
    return "\n".join(out) + "\n"


def parse_certificate(text: str) -> dict[int, int]:
    col: dict[int, int] = {}
    for no, toks in _lines(text):
        if toks[0] == "trace":
            continue
        if toks[0] != "coloring":
            raise ParseError(no, f"unexpected keyword {toks[0]!r}")
        v, c = _ints(no, toks[1:], 2, "coloring")
        if v in col:
            raise ParseError(no, f"vertex {v} colored twice")
        col[v] = c
    return col


def reproducer(g: OuterplaneGraph, precolored: dict[int, int], notes: list[str]) -> str:
    """A self-contained graph file (original labels kept) annotated with comments."""
    head = [f"# {line}" for line in notes]
    body = [f"outerplane {g.n} {len(g.chords)}", " ".join(map(str, g.outer_cycle))]
    body += [f"chord {a} {b}" for a, b in g.chords]
    body += [f"precolor {v} {c}" for v, c in sorted(precolored.items())]
    return "\n".join(head + body) + "\n"
