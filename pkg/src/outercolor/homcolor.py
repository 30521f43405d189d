"""Face-by-face coloring through fixed homomorphisms of 4- and 5-cycles into K3.

A table lists the image of the face positions a, b, c, d[, e]; ``anchor``
is the face vertex placed at position a and ``direction`` says whether
the remaining positions follow the face clockwise (``"cw"``, the outer
cycle order) or counter-clockwise.  Pseudo-colors are the letters X, Y, Z.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional

from .errors import AdjustmentFailed, InconsistentAnchor, PreconditionViolated
from .graph import Edge, Face, OuterplaneGraph, edge, weak_dual
from .oracle import face_completions

PSEUDO = ("X", "Y", "Z")
PSEUDO_TO_COLOR = {"X": 1, "Y": 2, "Z": 3}

_TABLES = {
    "f1": "XYZY",
    "f2": "XZYZ",
    "f3": "XYXZ",
    "f4": "XYXY",
    "f5": "XZXZ",
    "f6": "XZXY",
    "F1": "XZYZY",
    "F2": "XZYXY",
    "F3": "YZXZX",
}
PRECEDENCE = {4: ("f1", "f2", "f3", "f4", "f5", "f6"), 5: ("F1", "F2", "F3")}
SWAPS = {"f1": ("f3", "f4"), "f2": ("f5", "f6"), "F1": ("F3", "F2")}


@dataclass(frozen=True)
class HomMap:
    id: str
    table: tuple[str, ...]

    @property
    def arity(self) -> int:
        return len(self.table)


def hom_table(map_id: str) -> HomMap:
    try:
        return HomMap(map_id, tuple(_TABLES[map_id]))
    except KeyError:
        raise ValueError(f"unknown homomorphism {map_id!r}") from None


def all_tables() -> list[HomMap]:
    return [hom_table(i) for i in _TABLES]


@dataclass(frozen=True)
class MapUse:
    face: Face
    map_id: str  # a table id, "triangle", or "direct"
    anchor: Optional[int] = None
    direction: Optional[str] = None


@dataclass
class HomColoring:
    assignment: dict[int, str] = field(default_factory=dict)
    maps_used: list[MapUse] = field(default_factory=list)

    def copy(self) -> "HomColoring":
        return HomColoring(dict(self.assignment), list(self.maps_used))

    def to_colors(self, first: Optional[str] = None, color: int = 1) -> dict[int, int]:
        """Translate pseudo-colors to 1..3.  By default X, Y, Z -> 1, 2, 3; if
        ``first`` is given that letter is sent to ``color`` and the other
        two letters keep their relative order on the remaining colors."""
        if first is None:
            perm = dict(PSEUDO_TO_COLOR)
        else:
            rest = [c for c in (1, 2, 3) if c != color]
            others = [p for p in PSEUDO if p != first]
            perm = {first: color, others[0]: rest[0], others[1]: rest[1]}
        return {v: perm[p] for v, p in sorted(self.assignment.items())}


def align(face: Face, hm: HomMap, anchor: int, direction: str) -> dict[int, str]:
    vs = face.vertices
    if len(vs) != hm.arity:
        raise PreconditionViolated(f"{hm.id} needs a {hm.arity}-face, got {len(vs)}")
    i = vs.index(anchor)
    k = len(vs)
    step = 1 if direction == "cw" else -1
    return {vs[(i + step * j) % k]: hm.table[j] for j in range(k)}


def _alignments(face: Face, prefer: Optional[Edge] = None) -> list[tuple[int, str]]:
    """All (anchor, direction) pairs; those placing positions (a, b) on ``prefer``
    come first, ties by anchor id then cw before ccw."""
    vs = face.vertices
    k = len(vs)
    out = []
    for i, v in enumerate(vs):
        for d, step in (("cw", 1), ("ccw", -1)):
            nxt = vs[(i + step) % k]
            on_edge = prefer is not None and edge(v, nxt) == prefer
            out.append((0 if on_edge else 1, v, 0 if d == "cw" else 1, v, d))
    out.sort()
    return [(v, d) for _, _, _, v, d in out]


def _consistent(img: Mapping[int, str], fixed: Mapping[int, str]) -> bool:
    return all(fixed[v] == c for v, c in img.items() if v in fixed)


def apply_hom(face: Face, map_id: str, anchor: Optional[int] = None,
              direction: Optional[str] = None,
              partial: Optional[HomColoring] = None) -> HomColoring:
    """Color ``face`` with table ``map_id``.

    With an explicit anchor and direction the alignment must agree with the
    colors already in ``partial``; without one the first agreeing alignment
    is used.  Previously colored vertices are never changed.
    """
    partial = partial or HomColoring()
    hm = hom_table(map_id)
    fixed = partial.assignment
    if anchor is not None:
        cands = [(anchor, direction or "cw")]
    else:
        cands = _alignments(face)
    for a, d in cands:
        img = align(face, hm, a, d)
        if _consistent(img, fixed):
            out = partial.copy()
            out.assignment.update(img)
            out.maps_used.append(MapUse(face, map_id, a, d))
            return out
    raise InconsistentAnchor(f"{map_id} cannot be aligned on {face.vertices} with {dict((v, fixed[v]) for v in face if v in fixed)}")


def _color_triangle(face: Face, psi: HomColoring) -> bool:
    fixed = psi.assignment
    known = [v for v in face if v in fixed]
    if len({fixed[v] for v in known}) != len(known):
        return False
    free = iter(p for p in PSEUDO if p not in {fixed[v] for v in known})
    for v in face:
        if v not in fixed:
            fixed[v] = next(free)
    psi.maps_used.append(MapUse(face, "triangle", face.vertices[0], "cw"))
    return True


def color_face(face: Face, psi: HomColoring, prefer: Optional[Edge] = None,
               tables: Optional[tuple[str, ...]] = None) -> bool:
    """Color the uncolored vertices of ``face`` in place: the first table in
    precedence order (then alignment order) agreeing with the existing colors;
    triangles by direct case analysis; faces no table fits get the least
    proper completion.  Returns False if the face cannot be properly colored."""
    if face.length == 3:
        return _color_triangle(face, psi)
    fixed = psi.assignment
    for map_id in tables or PRECEDENCE.get(face.length, ()):
        hm = hom_table(map_id)
        for a, d in _alignments(face, prefer):
            img = align(face, hm, a, d)
            if _consistent(img, fixed):
                fixed.update(img)
                psi.maps_used.append(MapUse(face, map_id, a, d))
                return True
    if tables is not None:
        return False
    part = {v: PSEUDO_TO_COLOR[fixed[v]] for v in face if v in fixed}
    for comp in face_completions(face, part):
        back = {c: p for p, c in PSEUDO_TO_COLOR.items()}
        for v, c in comp.items():
            fixed.setdefault(v, back[c])
        psi.maps_used.append(MapUse(face, "direct"))
        return True
    return False


@dataclass(frozen=True)
class FaceChain:
    faces: tuple[Face, ...]
    entry_edges: tuple[Edge, ...]
    u_face: Face
    v_face: Face

    @property
    def k(self) -> int:
        return len(self.faces)


def face_chain(h: OuterplaneGraph, u: int, v: int) -> FaceChain:
    dual = weak_dual(h)
    fs = dual.nodes
    fu = [i for i, f in enumerate(fs) if u in f]
    fv = [i for i, f in enumerate(fs) if v in f]
    best = None
    for i, j in itertools.product(fu, fv):
        p = dual.path(i, j)
        key = (len(p), tuple(fs[x].vertices for x in p))
        if best is None or key < best[0]:
            best = (key, p)
    path = best[1]
    faces = tuple(fs[x] for x in path)
    entries = []
    for a, b in zip(faces, faces[1:]):
        (e,) = set(a.edges()) & set(b.edges())
        entries.append(e)
    return FaceChain(faces, tuple(entries), faces[0], faces[-1])


def _blocked(face: Face, v: int, psi: HomColoring) -> set[str]:
    fixed = psi.assignment
    return {fixed[w] for w in face.neighbors_on_face(v) if w in fixed}


def _finish_last(face: Face, v: int, color: str, psi: HomColoring, prefer: Edge) -> bool:
    if color in _blocked(face, v, psi):
        return False
    psi.assignment[v] = color
    return color_face(face, psi, prefer)


def algorithm1(h: OuterplaneGraph, u: int, v: int) -> HomColoring:
    """Color the faces of the dual path from ``u`` to ``v`` so that u and v agree.

    Returns a coloring of the chain faces only; the rest of ``h`` is
    completed by :func:`complete_by_hom`.  Raises AdjustmentFailed when
    retabling the second-to-last face cannot free ψ(u) at v.
    """
    if u == v or h.adjacent(u, v):
        raise PreconditionViolated("u and v must be distinct and nonadjacent")
    if any(f.length > 5 for f in h.faces):
        raise PreconditionViolated("faces must have length <= 5; decompose first")
    chain = face_chain(h, u, v)
    faces = chain.faces

    if chain.k == 1:
        face = faces[0]
        for map_id in PRECEDENCE[face.length]:
            hm = hom_table(map_id)
            for a, d in _alignments(face):
                img = align(face, hm, a, d)
                if img[u] == img[v]:
                    return HomColoring(img, [MapUse(face, map_id, a, d)])
        raise AdjustmentFailed(face, "no table gives u and v the same color")

    psi = HomColoring()
    first = faces[0]
    if first.length == 3:
        _color_triangle(first, psi)
    else:
        opening = "f1" if first.length == 4 else "F1"
        anchor = min(first.vertices)
        psi = apply_hom(first, opening, anchor, "cw", psi)
    for i in range(1, chain.k - 1):
        if not color_face(faces[i], psi, chain.entry_edges[i - 1]):
            raise AdjustmentFailed(faces[i], "cannot extend across the chain")

    last, before = faces[-1], faces[-2]
    entry = chain.entry_edges[-1]
    attempt = psi.copy()
    if _finish_last(last, v, attempt.assignment[u], attempt, entry):
        return attempt

    # retable the second-to-last face
    used = psi.maps_used[-1]
    if used.face != before or used.map_id not in SWAPS:
        raise AdjustmentFailed(before, f"second-to-last face carries {used.map_id}; no swap listed")
    base = psi.copy()
    base.maps_used.pop()
    keep = set(base.assignment) - set(before.vertices)
    if chain.k > 2:
        keep |= set(chain.entry_edges[-2])
    prior = {w: c for w, c in base.assignment.items() if w in keep}
    prefer = chain.entry_edges[-2] if chain.k > 2 else None
    for target in SWAPS[used.map_id]:
        hm = hom_table(target)
        for a, d in [(used.anchor, used.direction)] + _alignments(before, prefer):
            img = align(before, hm, a, d)
            if not _consistent(img, prior):
                continue
            trial = HomColoring(dict(prior), list(base.maps_used))
            trial.assignment.update(img)
            trial.maps_used.append(MapUse(before, target, a, d))
            if _finish_last(last, v, trial.assignment[u], trial, entry):
                return trial
    raise AdjustmentFailed(before, f"swaps {SWAPS[used.map_id]} of {used.map_id} leave ψ(u) blocked at v")


def complete_by_hom(h: OuterplaneGraph, psi: HomColoring) -> HomColoring:
    """Extend a coloring of a connected set of faces to all of ``h``, one face at a time."""
    out = psi.copy()
    dual = weak_dual(h)
    fs = dual.nodes
    done = {i for i, f in enumerate(fs) if all(v in out.assignment for v in f)}
    if not done:
        start = next((i for i, f in enumerate(fs) if any(v in out.assignment for v in f)), 0)
        if not color_face(fs[start], out):
            raise AdjustmentFailed(fs[start], "cannot color starting face")
        done.add(start)
    frontier = sorted(done)
    while frontier:
        i = frontier.pop(0)
        for j, chord in dual.neighbors(i):
            if j in done:
                continue
            if not color_face(fs[j], out, chord):
                raise AdjustmentFailed(fs[j], "face not colorable from its chord")
            done.add(j)
            frontier.append(j)
    return out
