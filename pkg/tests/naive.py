"""Deliberately simple reference implementations used only as test oracles."""

import itertools
import math

import networkx as nx


def brute_colorings(vertices, edges, pre=None):
    vertices = sorted(vertices)
    pre = pre or {}
    for cols in itertools.product((1, 2, 3), repeat=len(vertices)):
        col = dict(zip(vertices, cols))
        if any(col[v] != c for v, c in pre.items()):
            continue
        if all(col[a] != col[b] for a, b in edges):
            yield col


def brute_count(vertices, edges, pre=None):
    return sum(1 for _ in brute_colorings(vertices, edges, pre))


def interleave(c1, c2, pos):
    a, b = sorted((pos[c1[0]], pos[c1[1]]))
    x, y = pos[c2[0]], pos[c2[1]]
    return (a < x < b) != (a < y < b) and len({*c1, *c2}) == 4


def embedding_faces(cycle, chords):
    """Inner faces by walking a straight-line drawing on a circle."""
    n = len(cycle)
    xy = {v: (math.cos(2 * math.pi * i / n), -math.sin(2 * math.pi * i / n)) for i, v in enumerate(cycle)}
    g = nx.Graph()
    g.add_edges_from((cycle[i], cycle[(i + 1) % n]) for i in range(n))
    g.add_edges_from(chords)
    emb = nx.PlanarEmbedding()
    for v in g:
        nbrs = sorted(g[v], key=lambda w: math.atan2(xy[w][1] - xy[v][1], xy[w][0] - xy[v][0]))
        prev = None
        for w in nbrs:
            emb.add_half_edge(v, w, cw=prev) if prev is not None else emb.add_half_edge(v, w)
            prev = w
    seen = set()
    faces = []
    for a, b in emb.edges():
        if (a, b) in seen:
            continue
        f = emb.traverse_face(a, b, mark_half_edges=seen)
        faces.append(f)
    if not chords:
        return [tuple(sorted(cycle))]
    # with a chord present the only face through every vertex is the outer one
    faces = [f for f in faces if len(f) != n]
    return sorted(tuple(sorted(f)) for f in faces)


def triangle_class(cycle, tri):
    n = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    k = sum(1 for a, b in itertools.combinations(tri, 2) if (pos[a] - pos[b]) % n in (1, n - 1))
    return {2: "marginal", 1: "striped", 0: "internal", 3: "marginal"}[k]


def shares_edge(f1, f2):
    def es(f):
        return {frozenset((f[i], f[(i + 1) % len(f)])) for i in range(len(f))}
    return bool(es(f1) & es(f2))


def naive_structures(faces, cycle):
    """Structures read straight off their definitions by scanning every face pair."""
    tris = [f for f in faces if len(f) == 3]
    mids = [f for f in faces if len(f) in (4, 5)]
    cls = {t: triangle_class(cycle, t) for t in tris}
    diamonds, cakes, hamburgers = set(), set(), set()
    for t1, t2 in itertools.combinations(tris, 2):
        common = set(t1) & set(t2)
        if len(common) == 2:
            diamonds.add(frozenset(set(t1) ^ set(t2)))
        for f in mids:
            if not (shares_edge(t1, f) and shares_edge(t2, f)):
                continue
            if cls[t1] == cls[t2] == "marginal" and len(common) == 1:
                cakes.add((frozenset((t1, t2)), f))
            if (cls[t1] == "marginal") != (cls[t2] == "marginal"):
                hamburgers.add((frozenset((t1, t2)), f))
    return diamonds, cakes, hamburgers
