"""Outerplane graphs given by their Hamiltonian outer cycle and chords.

The embedding is fixed by the cycle order: every inner face lists its
vertices in the same cyclic order as the outer cycle, which lets faces be
computed with a single stack sweep.
"""

from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import BadCycle, ChordIsCycleEdge, CrossingChords, DuplicateEdge

log = logging.getLogger(__name__)

MARGINAL = "marginal"
STRIPED = "striped"
INTERNAL = "internal"

Edge = tuple[int, int]


def edge(a: int, b: int) -> Edge:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Face:
    """An inner face, listed in outer-cycle (clockwise) order."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def neighbors_on_face(self, v: int) -> tuple[int, int]:
        i = self.vertices.index(v)
        k = len(self.vertices)
        return self.vertices[i - 1], self.vertices[(i + 1) % k]


@dataclass(frozen=True)
class OuterplaneGraph:
    """H-embedding: clockwise Hamiltonian cycle plus a set of chords.

    Construction only normalizes; call :func:`validate` (or use
    :meth:`build`) to check the invariants.
    """

    outer_cycle: tuple[int, ...]
    chords: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "outer_cycle", tuple(int(v) for v in self.outer_cycle))
        object.__setattr__(
            self, "chords", tuple(sorted(edge(int(a), int(b)) for a, b in self.chords))
        )

    @classmethod
    def build(cls, outer_cycle: Iterable[int], chords: Iterable[Iterable[int]] = ()) -> "OuterplaneGraph":
        g = cls(tuple(outer_cycle), tuple(tuple(c) for c in chords))
        validate(g)
        return g

    @classmethod
    def cycle(cls, n: int, chords: Iterable[Iterable[int]] = ()) -> "OuterplaneGraph":
        """Graph on vertices 1..n with the cycle 1, 2, ..., n."""
        return cls.build(range(1, n + 1), chords)

    @property
    def n(self) -> int:
        return len(self.outer_cycle)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.outer_cycle

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.outer_cycle)}

    @cached_property
    def cycle_edges(self) -> tuple[Edge, ...]:
        c = self.outer_cycle
        return tuple(edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(set(self.cycle_edges) | set(self.chords)))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.outer_cycle}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(s) for v, s in adj.items()}

    def adjacent(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def is_cycle_edge(self, a: int, b: int) -> bool:
        pos = self.position
        d = (pos[a] - pos[b]) % self.n
        return d == 1 or d == self.n - 1

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def with_chords(self, extra: Iterable[Edge]) -> "OuterplaneGraph":
        return OuterplaneGraph(self.outer_cycle, self.chords + tuple(extra))

    def without_chord(self, a: int, b: int) -> "OuterplaneGraph":
        e = edge(a, b)
        return OuterplaneGraph(self.outer_cycle, tuple(c for c in self.chords if c != e))

    def delete_vertex(self, w: int) -> "OuterplaneGraph":
        """Remove a degree-2 vertex whose two neighbors are adjacent (a marginal ear)."""
        if self.degree(w) != 2 or self.n <= 3:
            raise ValueError(f"vertex {w} is not the tip of a marginal triangle")
        a, b = sorted(self.adjacency[w])
        if not self.adjacent(a, b):
            raise ValueError(f"vertex {w} is not the tip of a marginal triangle")
        cycle = tuple(v for v in self.outer_cycle if v != w)
        chords = tuple(c for c in self.chords if c != edge(a, b))
        return OuterplaneGraph(cycle, chords)

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(_compute_faces(self))

    @cached_property
    def triangles(self) -> tuple["TriangleInfo", ...]:
        return tuple(classify_triangles(self))

    @property
    def triangle_count(self) -> int:
        return sum(1 for f in self.faces if f.length == 3)


def validate(g: OuterplaneGraph) -> None:
    cyc = g.outer_cycle
    if len(cyc) < 3:
        raise BadCycle(f"outer cycle needs at least 3 vertices, got {len(cyc)}")
    if len(set(cyc)) != len(cyc):
        raise BadCycle("outer cycle repeats a vertex")
    pos = {v: i for i, v in enumerate(cyc)}
    n = len(cyc)
    seen = set()
    for a, b in g.chords:
        if a not in pos or b not in pos:
            raise BadCycle(f"chord {(a, b)} uses a vertex not on the outer cycle")
        if a == b:
            raise DuplicateEdge(f"loop at {a}")
        if (a, b) in seen:
            raise DuplicateEdge(f"chord {(a, b)} given twice")
        seen.add((a, b))
        d = (pos[a] - pos[b]) % n
        if d in (1, n - 1):
            raise ChordIsCycleEdge(f"chord {(a, b)} joins consecutive cycle vertices")
    # sweep: chords as position intervals must nest or be disjoint
    spans = sorted(
        ((min(pos[a], pos[b]), max(pos[a], pos[b]), (a, b)) for a, b in g.chords),
        key=lambda s: (s[0], -s[1]),
    )
    stack: list[tuple[int, int, Edge]] = []
    for lo, hi, c in spans:
        while stack and stack[-1][1] <= lo:
            stack.pop()
        if stack and hi > stack[-1][1]:
            raise CrossingChords(stack[-1][2], c)
        stack.append((lo, hi, c))


def chords_cross(g: OuterplaneGraph, c1: Edge, c2: Edge) -> bool:
    pos = g.position
    a, b = sorted((pos[c1[0]], pos[c1[1]]))
    c, d = sorted((pos[c2[0]], pos[c2[1]]))
    return a < c < b < d or c < a < d < b


def _compute_faces(g: OuterplaneGraph) -> list[Face]:
    pos = g.position
    n = g.n
    closing: dict[int, list[int]] = {}
    for a, b in g.chords:
        lo, hi = sorted((pos[a], pos[b]))
        closing.setdefault(hi, []).append(lo)
    faces = []
    stack: list[int] = []
    for p in range(n):
        for lo in sorted(closing.get(p, ()), reverse=True):
            inner = []
            while stack[-1] != lo:
                inner.append(stack.pop())
            faces.append([lo] + inner[::-1] + [p])
        stack.append(p)
    faces.append(stack)
    cyc = g.outer_cycle
    out = [Face(tuple(cyc[i] for i in f)) for f in faces]
    out.sort(key=lambda f: f.vertices)
    return out


def faces(g: OuterplaneGraph) -> list[Face]:
    return list(g.faces)


@dataclass(frozen=True)
class TriangleInfo:
    face: Face
    cls: str
    outer_edge_count: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.face.vertices


def classify_triangles(g: OuterplaneGraph) -> list[TriangleInfo]:
    out = []
    for f in g.faces:
        if f.length != 3:
            continue
        k = sum(1 for a, b in f.edges() if g.is_cycle_edge(a, b))
        if k == 3:
            log.info("whole graph is a single triangle; reported as marginal")
            cls = MARGINAL
        else:
            cls = (INTERNAL, STRIPED, MARGINAL)[k]
        out.append(TriangleInfo(f, cls, k))
    return out


def tip(g: OuterplaneGraph, t: TriangleInfo) -> int | None:
    """The degree-2 vertex of a marginal triangle (None for other classes)."""
    if t.outer_edge_count != 2:
        return None
    for v in t.vertices:
        others = [w for w in t.vertices if w != v]
        if all(g.is_cycle_edge(v, w) for w in others):
            return v
    return None


@dataclass(frozen=True)
class DiamondStructure:
    shared_edge: Edge
    diamond_vertices: Edge


@dataclass(frozen=True)
class Cake:
    triangles: tuple[Face, Face]
    common_vertex: int
    face: Face


@dataclass(frozen=True)
class Hamburger:
    marginal: Face
    other: Face
    face: Face


@dataclass(frozen=True)
class StructureReport:
    triangles: tuple[TriangleInfo, ...]
    diamonds: tuple[DiamondStructure, ...] = ()
    cakes: tuple[Cake, ...] = ()
    hamburgers: tuple[Hamburger, ...] = ()
    ambiguous: tuple[tuple[Face, Face], ...] = field(default=(), compare=False)


def _shares_edge(f1: Face, f2: Face) -> bool:
    return bool(set(f1.edges()) & set(f2.edges()))


def detect_structures(g: OuterplaneGraph) -> StructureReport:
    tris = g.triangles
    diamonds = []
    for t1, t2 in itertools.combinations(tris, 2):
        common = set(t1.face.edges()) & set(t2.face.edges())
        if common:
            (e,) = common
            apex = tuple(sorted((set(t1.vertices) | set(t2.vertices)) - set(e)))
            diamonds.append(DiamondStructure(e, apex))

    mid_faces = [f for f in g.faces if f.length in (4, 5)]
    cakes, burgers, ambiguous = [], [], []
    for t1, t2 in itertools.combinations(tris, 2):
        shared_vs = set(t1.vertices) & set(t2.vertices)
        m1, m2 = t1.cls == MARGINAL, t2.cls == MARGINAL
        for f in mid_faces:
            e1, e2 = _shares_edge(t1.face, f), _shares_edge(t2.face, f)
            if not (e1 and e2):
                touch1 = e1 or set(t1.vertices) & set(f.vertices)
                touch2 = e2 or set(t2.vertices) & set(f.vertices)
                if touch1 and touch2:
                    ambiguous.append((t1.face, f))
                    log.debug("triangles %s, %s touch face %s without both sharing an edge",
                              t1.vertices, t2.vertices, f.vertices)
                continue
            if m1 and m2 and len(shared_vs) == 1:
                cakes.append(Cake((t1.face, t2.face), next(iter(shared_vs)), f))
            elif m1 != m2:
                marg, other = (t1, t2) if m1 else (t2, t1)
                burgers.append(Hamburger(marg.face, other.face, f))
    diamonds.sort(key=lambda d: (min(d.shared_edge + d.diamond_vertices), d.shared_edge))
    cakes.sort(key=lambda c: (min(c.triangles[0].vertices + c.triangles[1].vertices), c.triangles, c.face.vertices))
    burgers.sort(key=lambda h: (min(h.marginal.vertices + h.other.vertices), h.marginal.vertices, h.face.vertices))
    return StructureReport(tris, tuple(diamonds), tuple(cakes), tuple(burgers), tuple(ambiguous))


@dataclass(frozen=True)
class DualTree:
    nodes: tuple[Face, ...]
    edges: tuple[tuple[int, int, Edge], ...]  # (face index, face index, shared chord)

    def neighbors(self, i: int) -> Iterator[tuple[int, Edge]]:
        for a, b, c in self.edges:
            if a == i:
                yield b, c
            elif b == i:
                yield a, c

    def path(self, i: int, j: int) -> list[int]:
        prev = {i: None}
        q = deque([i])
        while q:
            x = q.popleft()
            if x == j:
                break
            for y, _ in self.neighbors(x):
                if y not in prev:
                    prev[y] = x
                    q.append(y)
        out = [j]
        while out[-1] != i:
            out.append(prev[out[-1]])
        return out[::-1]


def weak_dual(g: OuterplaneGraph) -> DualTree:
    fs = g.faces
    owner: dict[Edge, list[int]] = {}
    for i, f in enumerate(fs):
        for e in f.edges():
            owner.setdefault(e, []).append(i)
    chords = set(g.chords)
    edges = []
    for e, idx in owner.items():
        if e in chords:
            a, b = idx
            edges.append((a, b, e))
    edges.sort()
    return DualTree(fs, tuple(edges))


def distance(g: OuterplaneGraph, u: int, v: int) -> int:
    if u == v:
        return 0
    adj = g.adjacency
    dist = {u: 0}
    q = deque([u])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                q.append(y)
    raise ValueError(f"{v} unreachable from {u}")


def common_neighbors(g: OuterplaneGraph, u: int, v: int) -> frozenset[int]:
    return g.adjacency[u] & g.adjacency[v]


def is_proper(edges: Iterable[Edge], coloring: dict[int, int]) -> bool:
    return all(coloring[a] != coloring[b] for a, b in edges if a in coloring and b in coloring)
