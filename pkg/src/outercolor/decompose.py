"""Chord insertion down to faces of length at most five, and biconnected augmentation."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NoSafeAugmentation, NoSafeChord, PreconditionViolated
from .graph import Edge, OuterplaneGraph, common_neighbors, edge, validate

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecompositionResult:
    h: OuterplaneGraph
    added_chords: tuple[Edge, ...]
    face_map: tuple[tuple[tuple[int, ...], int], ...]


def _protected_set(protected) -> set[Edge]:
    return {edge(a, b) for a, b in (protected or ())}


def creates_triangle(adj: dict[int, set[int]], a: int, b: int) -> bool:
    return bool(adj[a] & adj[b])


def _candidates(face: Sequence[int]) -> Iterable[tuple[int, int]]:
    """Index pairs of a face in canonical order: splitting off 4-faces, then 5-faces,
    then everything else at face-distance >= 2."""
    k = len(face)
    seen = set()
    for gap in (3, 4):
        for i in range(k):
            j = (i + gap) % k
            key = (min(i, j), max(i, j))
            if key not in seen and min(gap, k - gap) >= 2:
                seen.add(key)
                yield i, j
    for gap in range(2, k - 1):
        for i in range(k):
            j = (i + gap) % k
            key = (min(i, j), max(i, j))
            if key not in seen:
                seen.add(key)
                yield i, j


def decompose_to_small_faces(g: OuterplaneGraph, protected: Iterable[Iterable[int]] = ()) -> DecompositionResult:
    """Add chords until every inner face has length <= 5 without creating triangles."""
    prot = _protected_set(protected)
    for a, b in prot:
        if g.adjacent(a, b):
            raise PreconditionViolated(f"protected pair {(a, b)} is adjacent")
    adj = {v: set(s) for v, s in g.adjacency.items()}
    added: list[Edge] = []
    work = [list(f.vertices) for f in g.faces if f.length >= 6]
    while work:
        face = work.pop()
        for i, j in _candidates(face):
            a, b = face[i], face[j]
            e = edge(a, b)
            if e in prot or b in adj[a] or creates_triangle(adj, a, b):
                continue
            break
        else:
            raise NoSafeChord(face)
        adj[a].add(b)
        adj[b].add(a)
        added.append(e)
        i, j = sorted((i, j))
        for part in (face[i:j + 1], face[j:] + face[:i + 1]):
            if len(part) >= 6:
                work.append(part)
    h = g.with_chords(added)
    fm = tuple((f.vertices, f.length) for f in h.faces)
    return DecompositionResult(h, tuple(added), fm)


@dataclass(frozen=True)
class ConnectedOuterplane:
    """A connected outerplane graph given by an outer-boundary vertex order
    (each vertex once, in order of first visit along the outer walk) and
    its edge set; every edge must be non-crossing with respect to the order."""

    order: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "edges", tuple(sorted({edge(a, b) for a, b in self.edges})))

    @property
    def vertices(self):
        return tuple(sorted(self.order))


@dataclass(frozen=True)
class Augmentation:
    graph: OuterplaneGraph
    added_edges: tuple[Edge, ...]
    added_vertices: tuple[int, ...]


def augment_to_biconnected(g1: ConnectedOuterplane, protected: Iterable[Iterable[int]] = (),
                           allow_subdivision: bool = True) -> Augmentation:
    """Close the outer-boundary order into a Hamiltonian cycle.

    Consecutive vertices that are not adjacent are joined by one edge when
    that edge creates no triangle and joins no protected pair; otherwise, if
    ``allow_subdivision``, through a fresh degree-2 vertex.  Colorings of the
    result restrict to colorings of ``g1``.
    """
    prot = _protected_set(protected)
    order = list(g1.order)
    if len(order) < 2:
        raise PreconditionViolated("need at least two vertices")
    adj: dict[int, set[int]] = {v: set() for v in order}
    for a, b in g1.edges:
        adj[a].add(b)
        adj[b].add(a)
    next_id = max(order) + 1
    cycle: list[int] = []
    added_e: list[Edge] = []
    added_v: list[int] = []
    k = len(order)
    for i, a in enumerate(order):
        b = order[(i + 1) % k]
        cycle.append(a)
        if b in adj[a]:
            continue
        if edge(a, b) not in prot and not creates_triangle(adj, a, b):
            adj[a].add(b)
            adj[b].add(a)
            added_e.append(edge(a, b))
            continue
        if not allow_subdivision:
            cut = min(adj[a] & adj[b]) if adj[a] & adj[b] else None
            raise NoSafeAugmentation(cut, (a, b))
        w = next_id
        next_id += 1
        adj[w] = {a, b}
        adj[a].add(w)
        adj[b].add(w)
        cycle.append(w)
        added_v.append(w)
        added_e.extend([edge(a, w), edge(w, b)])
    if len(cycle) < 3:
        # a single edge: close it into a 4-cycle through two fresh vertices
        if not allow_subdivision:
            raise NoSafeAugmentation(None, tuple(order))
        a, b = cycle
        cycle.extend([next_id, next_id + 1])
        added_v.extend([next_id, next_id + 1])
        added_e.extend([edge(b, next_id), edge(next_id, next_id + 1), edge(next_id + 1, a)])
    cyc_edges = {edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    chords = [e for e in g1.edges if e not in cyc_edges]
    h = OuterplaneGraph(tuple(cycle), tuple(chords))
    validate(h)
    return Augmentation(h, tuple(added_e), tuple(added_v))
