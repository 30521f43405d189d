"""Precoloring extension for outerplane graphs with few triangles.

Three precolored independent vertices are handled on graphs with at most
one triangle, two precolored independent vertices on graphs with at most
two.  Each branch builds an auxiliary graph around a seeded short cycle,
solves it and projects the coloring back.  Steps whose existence guarantee comes from outside
results are discharged by the exact oracle; the oracle failing on a
hypothesis-satisfying instance is reported as a counterexample candidate,
never hidden.

Every Success coloring is checked before it is returned; every Infeasible
answer carries an oracle count of zero.
"""

from __future__ import annotations

import itertools
import logging
import os
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .decompose import ConnectedOuterplane, augment_to_biconnected, decompose_to_small_faces
from .errors import AdjustmentFailed, NoSafeChord, PreconditionViolated
from .graph import (Edge, OuterplaneGraph, common_neighbors, detect_structures, distance, edge,
                    tip, validate)
from .homcolor import algorithm1, complete_by_hom
from .oracle import COLORS, EdgeListGraph, check_coloring, count_extensions, oracle_extend

log = logging.getLogger(__name__)

SUCCESS = "success"
INFEASIBLE = "infeasible"
NOT_COVERED = "not_covered"

ORACLE_ONLY_ENV = "OUTERCOLOR_ORACLE_ONLY"


@dataclass(frozen=True)
class ExtensionInstance:
    g: OuterplaneGraph
    precolored: Mapping[int, int]


@dataclass
class ExtensionResult:
    outcome: str
    coloring: Optional[dict[int, int]] = None
    certificate: list[str] = field(default_factory=list)
    witness: Optional[str] = None
    diagnostic: Optional[str] = None
    fallback: bool = False
    counterexample: bool = False
    # the chain coloring produced by the face-chain algorithm, when it ran
    partial: Optional[dict[int, int]] = None
    chain: Optional["ChainRun"] = None

    @property
    def ok(self) -> bool:
        return self.outcome == SUCCESS


@dataclass
class AuxGraph:
    base: OuterplaneGraph
    added_vertices: tuple[int, ...] = ()
    added_edges: tuple[Edge, ...] = ()
    deleted_vertices: tuple[int, ...] = ()
    seeded_cycle: tuple[int, ...] = ()
    seeds: dict[int, int] = field(default_factory=dict)

    def graph(self) -> EdgeListGraph:
        gone = set(self.deleted_vertices)
        verts = [v for v in self.base.vertices if v not in gone] + list(self.added_vertices)
        edges = [e for e in tuple(self.base.edges) + tuple(self.added_edges)
                 if e[0] not in gone and e[1] not in gone]
        return EdgeListGraph(tuple(verts), tuple(edges))

    def triangle_count(self) -> int:
        g = self.graph()
        adj = g.adjacency
        return sum(1 for a, b in g.edges for c in adj[a] & adj[b] if c > b)

    def describe(self) -> str:
        return (f"aux +V{list(self.added_vertices)} -V{list(self.deleted_vertices)} "
                f"+E{[list(e) for e in self.added_edges]} "
                f"seed {' '.join(f'{v}:{self.seeds[v]}' for v in self.seeded_cycle if v in self.seeds)}")


@dataclass
class ChainRun:
    """Record of one face-chain pass: the decomposed graph it ran on and its status."""

    h: OuterplaneGraph
    u: int
    v: int
    status: str  # "ok" or "adjustment-failed"


class _Run:
    """Per-call trace collector; no state outlives one extend call."""

    def __init__(self, g, pre):
        self.g = g
        self.pre = dict(pre)
        self.trace: list[str] = []
        self.fallback = False
        self.partial: Optional[dict[int, int]] = None
        self.chain: Optional[ChainRun] = None

    def note(self, line: str):
        self.trace.append(line)

    def discharge(self, aux: AuxGraph) -> Optional[dict[int, int]]:
        self.note(aux.describe())
        self.note(f"oracle aux-graph n={len(aux.graph().vertices)} triangles={aux.triangle_count()}")
        col = oracle_extend(aux.graph(), aux.seeds)
        if col is None:
            self.note("oracle aux-graph exhausted")
            return None
        return {v: col[v] for v in self.g.vertices if v in col}

    def success(self, col: Mapping[int, int]) -> ExtensionResult:
        return ExtensionResult(SUCCESS, {v: col[v] for v in sorted(col)}, self.trace,
                               fallback=self.fallback, partial=self.partial, chain=self.chain)

    def finish(self, col: Optional[Mapping[int, int]], within: bool = True) -> ExtensionResult:
        """Verify a constructed coloring, falling back to the oracle on the input graph."""
        if col is not None:
            col = {v: col[v] for v in self.g.vertices if v in col}
            bad = check_coloring(self.g, col, self.pre)
            if bad is None:
                return self.success(col)
            self.note(f"divergence constructed coloring rejected: {bad}")
            log.warning("constructed coloring rejected: %s", bad)
        self.fallback = True
        self.note("fallback oracle on input graph")
        col = oracle_extend(self.g, self.pre)
        if col is not None:
            return self.success(col)
        return self.exhausted(within)

    def exhausted(self, within: bool = True) -> ExtensionResult:
        n = count_extensions(self.g, self.pre)
        assert n == 0
        self.note("oracle count_extensions 0")
        if within:
            self.note("counterexample-candidate instance satisfies the extension hypotheses")
        return ExtensionResult(INFEASIBLE, None, self.trace, witness="oracle-exhaustion count 0",
                               fallback=self.fallback, counterexample=within, partial=self.partial,
                               chain=self.chain)


def _oracle_only() -> bool:
    return os.environ.get(ORACLE_ONLY_ENV, "") == "1"


def _check_instance(g: OuterplaneGraph, pre: Mapping[int, int]) -> None:
    for v, c in pre.items():
        if v not in g.position:
            raise PreconditionViolated(f"precolored vertex {v} not in graph")
        if c not in COLORS:
            raise PreconditionViolated(f"color {c} not in 1..3")
    for a, b in itertools.combinations(sorted(pre), 2):
        if g.adjacent(a, b):
            raise PreconditionViolated(f"precolored vertices {a} and {b} are adjacent")


def _cyclic(g: OuterplaneGraph, vs) -> list[int]:
    return sorted(vs, key=g.position.__getitem__)


def _fresh(g: OuterplaneGraph, k: int) -> list[int]:
    m = max(g.vertices)
    return list(range(m + 1, m + 1 + k))


def _third(*cs: int) -> int:
    return next(c for c in COLORS if c not in cs)


def _relabel_triple(g: OuterplaneGraph, ys: list[int], run: _Run) -> list[int]:
    """A rotation or reflection of the clockwise triple with d(y1,y2), d(y2,y3) >= 2."""
    options = []
    for r in range(3):
        rot = ys[r:] + ys[:r]
        options += [rot, rot[::-1]]
    for opt in options:
        if distance(g, opt[0], opt[1]) >= 2 and distance(g, opt[1], opt[2]) >= 2:
            return opt
    run.note("relabel no distance pattern; direct oracle")
    return []


# ---------------------------------------------------------------- three precolored

def case_distinct(g: OuterplaneGraph, pre: Mapping[int, int], _run: Optional[_Run] = None) -> ExtensionResult:
    """Three independent vertices with three different colors (at most one triangle)."""
    _require(g, pre, 3, max_triangles=1)
    if len(set(pre.values())) != 3:
        raise PreconditionViolated("colors must be pairwise distinct")
    run = _run or _Run(g, pre)
    run.note("case three-precolored distinct-colors")
    ys = _relabel_triple(g, _cyclic(g, pre), run)
    if not ys:
        return run.finish(None)
    y1, y2, y3 = ys
    c1, c2, c3 = pre[y1], pre[y2], pre[y3]
    u, v = _fresh(g, 2)
    aux = AuxGraph(g, (u, v), (edge(y1, u), edge(u, y2), edge(y2, v), edge(v, y3), edge(y1, y3)),
                   seeded_cycle=(y1, u, y2, v, y3),
                   seeds={y1: c1, u: c3, y2: c2, v: c1, y3: c3})
    run.note(f"construction five-cycle {y1} {u} {y2} {v} {y3}")
    return run.finish(run.discharge(aux))


def case_same(g: OuterplaneGraph, pre: Mapping[int, int], _run: Optional[_Run] = None) -> ExtensionResult:
    """Three independent vertices sharing one color (at most one triangle)."""
    _require(g, pre, 3, max_triangles=1)
    if len(set(pre.values())) != 1:
        raise PreconditionViolated("colors must all be equal")
    run = _run or _Run(g, pre)
    run.note("case three-precolored same-color")
    ys = _cyclic(g, pre)
    (apex,) = _fresh(g, 1)
    aux = AuxGraph(g, (apex,), tuple(edge(apex, y) for y in ys), seeded_cycle=tuple(ys),
                   seeds=dict(pre))
    run.note(f"construction apex {apex} joined to {' '.join(map(str, ys))}")
    return run.finish(run.discharge(aux))


def _reinstate(g: OuterplaneGraph, col: dict[int, int], vs) -> bool:
    for w in vs:
        used = {col[x] for x in g.adjacency[w] if x in col}
        free = [c for c in COLORS if c not in used]
        if not free:
            return False
        col[w] = free[0]
    return True


def case_two_one(g: OuterplaneGraph, pre: Mapping[int, int], _run: Optional[_Run] = None) -> ExtensionResult:
    """Three independent vertices, exactly two of them sharing a color."""
    _require(g, pre, 3, max_triangles=1)
    if len(set(pre.values())) != 2:
        raise PreconditionViolated("exactly two colors must coincide")
    run = _run or _Run(g, pre)
    ys = _cyclic(g, pre)
    y1, y2, y3 = ys
    if pre[y2] == pre[y3]:
        y1, y2, y3 = y2, y3, y1
    if pre[y1] == pre[y2]:
        return _two_one_adjacent_pair(g, pre, run, y1, y2, y3)
    return _two_one_split_pair(g, pre, run, y1, y2, y3)


def _two_one_adjacent_pair(g, pre, run, y1, y2, y3):
    run.note("case three-precolored two-one consecutive-pair")
    c, c3 = pre[y1], pre[y3]
    cbar = _third(c, c3)
    u, v = _fresh(g, 2)
    aux = AuxGraph(g, (u, v), (edge(y1, u), edge(u, y2), edge(y2, v), edge(v, y3), edge(y1, y3)),
                   seeded_cycle=(y1, u, y2, v, y3),
                   seeds={y1: c, u: cbar, y2: c, v: cbar, y3: c3})
    run.note(f"construction five-cycle {y1} {u} {y2} {v} {y3}")
    return run.finish(run.discharge(aux))


def _two_one_split_pair(g, pre, run, y1, y2, y3):
    c, c2 = pre[y1], pre[y2]
    t = _third(c, c2)
    d1, d2 = distance(g, y1, y2), distance(g, y2, y3)
    u, v = _fresh(g, 2)
    if d1 == 2 and d2 == 2:
        run.note("case three-precolored two-one outer-pair both-distances-two")
        p = min(common_neighbors(g, y1, y2))
        qs = sorted(common_neighbors(g, y2, y3) - {p}) or [p]
        q = qs[0]
        if p != q and g.adjacent(p, q):
            run.note(f"obstruction triangle {p} {y2} {q}")
            n = count_extensions(g, pre)
            run.note(f"oracle count_extensions {n}")
            if n == 0:
                return ExtensionResult(INFEASIBLE, None, run.trace,
                                       witness=f"triangle {p} {y2} {q} forces equal colors on {p},{q}",
                                       counterexample=True)
            run.note("divergence obstruction not confirmed by oracle")
            return run.finish(None)
        gone = (p,) if p == q else (p, q)
        for su, sv in ((c2, t), (t, c2)):
            aux = AuxGraph(g, (u, v), (edge(y1, y2), edge(y2, y3), edge(y1, u), edge(u, v), edge(v, y3)),
                           deleted_vertices=gone, seeded_cycle=(y1, y2, y3, u, v),
                           seeds={y1: c, y2: c2, y3: c, u: su, v: sv})
            col = run.discharge(aux)
            if col is not None:
                if _reinstate(g, col, gone):
                    run.note(f"reinstate {' '.join(f'{w}:{col[w]}' for w in gone)}")
                    return run.finish(col)
                run.note("reinstate greedy failed; solving with deleted vertices kept")
                keep = AuxGraph(g, aux.added_vertices, aux.added_edges, seeded_cycle=aux.seeded_cycle,
                                seeds=aux.seeds)
                col = run.discharge(keep)
                if col is not None:
                    return run.finish(col)
        return run.finish(None)
    if d1 == 2 or d2 == 2:
        run.note("case three-precolored two-one outer-pair one-distance-two")
        a, b = (y1, y3) if d1 == 2 else (y3, y1)
        # a is at distance two from y2
        for su in (c2, t):
            aux = AuxGraph(g, (u, v), (edge(a, u), edge(u, b), edge(y2, b), edge(y2, v), edge(a, v)),
                           seeded_cycle=(a, v, y2, b, u),
                           seeds={a: c, v: t, y2: c2, b: c, u: su})
            col = run.discharge(aux)
            if col is not None:
                return run.finish(col)
        return run.finish(None)
    run.note("case three-precolored two-one outer-pair distances-above-two")
    for su, sv in ((c2, t), (t, c2)):
        aux = AuxGraph(g, (u, v), (edge(y1, u), edge(y1, y2), edge(y2, y3), edge(y3, v), edge(u, v)),
                       seeded_cycle=(y1, u, v, y3, y2),
                       seeds={y1: c, u: su, v: sv, y3: c, y2: c2})
        col = run.discharge(aux)
        if col is not None:
            return run.finish(col)
    return run.finish(None)


# ---------------------------------------------------------------- two precolored

def diamond_apex_pairs(g: OuterplaneGraph) -> list[tuple[int, int]]:
    return [d.diamond_vertices for d in detect_structures(g).diamonds]


def case_two_triangles_distinct(g: OuterplaneGraph, pre: Mapping[int, int],
                                _run: Optional[_Run] = None) -> ExtensionResult:
    """Two independent vertices with different colors (at most two triangles)."""
    _require(g, pre, 2, max_triangles=2)
    (u, cu), (v, cv) = sorted(pre.items())
    if cu == cv:
        raise PreconditionViolated("colors must differ")
    run = _run or _Run(g, pre)
    run.note("case two-precolored distinct-colors")
    aux = AuxGraph(g, (), (edge(u, v),))
    h = aux.graph()
    run.note(f"construction add-edge {u} {v} triangles={aux.triangle_count()}")
    col = oracle_extend(h)
    if col is None:
        run.note("oracle aux-graph not 3-colorable")
        return run.finish(None)
    perm = {col[u]: cu, col[v]: cv}
    perm[_third(col[u], col[v])] = _third(cu, cv)
    run.note(f"permute {' '.join(f'{a}>{b}' for a, b in sorted(perm.items()))}")
    return run.finish({w: perm[col[w]] for w in g.vertices})


def case_two_triangles_same(g: OuterplaneGraph, pre: Mapping[int, int],
                            _run: Optional[_Run] = None) -> ExtensionResult:
    """Two independent vertices with the same color (at most two triangles)."""
    _require(g, pre, 2, max_triangles=2)
    (u, c), (v, cv) = sorted(pre.items())
    if c != cv:
        raise PreconditionViolated("colors must be equal")
    run = _run or _Run(g, pre)
    run.note("case two-precolored same-color")
    try:
        dec = decompose_to_small_faces(g, [(u, v)])
    except NoSafeChord as e:
        run.note(f"fallback no-safe-chord face {' '.join(map(str, e.face))}")
        log.info("decomposition dead end on %s", e.face)
        return run.finish(None)
    if dec.added_chords:
        run.note("decompose add " + " ".join(f"{a}-{b}" for a, b in dec.added_chords))
    col = _same_color_core(dec.h, u, v, c, run, depth=0)
    return run.finish(col)


def _seed_sets(h: OuterplaneGraph, verts, fixed: dict[int, int]):
    """Proper colorings of ``verts`` (induced edges of h) extending ``fixed``, lexicographic."""
    verts = sorted(set(verts))
    free = [w for w in verts if w not in fixed]
    inside = set(verts)
    edges = [e for e in h.edges if e[0] in inside and e[1] in inside]
    for cols in itertools.product(COLORS, repeat=len(free)):
        s = dict(fixed)
        s.update(zip(free, cols))
        if all(s[a] != s[b] for a, b in edges):
            yield s


def _same_color_core(h: OuterplaneGraph, u: int, v: int, c: int, run: _Run, depth: int):
    rep = detect_structures(h)
    pre = {u: c, v: c}

    for d in rep.diamonds:
        a, b = d.shared_edge
        if set(d.diamond_vertices) == {u, v}:
            run.note(f"reduction diamond-split remove {a}-{b}")
            h2 = h.without_chord(a, b)
            for ca, cb in itertools.permutations([x for x in COLORS if x != c], 2):
                seeds = {u: c, v: c, a: ca, b: cb}
                run.note(f"seed four-face {u}:{c} {a}:{ca} {v}:{c} {b}:{cb}")
                col = oracle_extend(h2, seeds)
                if col is not None:
                    return col
            run.note("oracle reduced graph exhausted")
            return None

    for d in rep.diamonds:
        apexes = set(d.diamond_vertices)
        for x, y in ((u, v), (v, u)):
            if x in apexes and y not in apexes and h.degree(x) == 2:
                (w2,) = apexes - {x}
                run.note(f"reduction apex-transfer delete {x} color {w2}:{c}")
                if h.adjacent(w2, y):
                    run.note(f"apex {w2} adjacent to {y}")
                    return None
                h7 = h.delete_vertex(x)
                col = oracle_extend(h7, {y: c, w2: c})
                if col is None:
                    run.note("oracle reduced graph exhausted")
                    return None
                col[x] = c
                return col

    for cake in rep.cakes:
        tips = {tip(h, t) for t in h.triangles if t.face in cake.triangles}
        if tips == {u, v}:
            verts = set(cake.triangles[0]) | set(cake.triangles[1]) | set(cake.face)
            run.note(f"structure cake common {cake.common_vertex} face {' '.join(map(str, cake.face))}")
            for seeds in _seed_sets(h, verts, pre):
                col = oracle_extend(h, seeds)
                if col is not None:
                    run.note("seed " + " ".join(f"{w}:{seeds[w]}" for w in sorted(seeds)))
                    return col
            run.note("oracle no cake seed extends")
            return None

    for hb in rep.hamburgers:
        marg = next(t for t in h.triangles if t.face == hb.marginal)
        w = tip(h, marg)
        for x, y in ((u, v), (v, u)):
            if w == x and y in hb.other:
                verts = set(hb.marginal) | set(hb.other) | set(hb.face)
                run.note(f"structure hamburger face {' '.join(map(str, hb.face))} delete {x}")
                h3 = h.delete_vertex(x)
                for seeds in _seed_sets(h, verts, pre):
                    rest = {z: k for z, k in seeds.items() if z != x}
                    col = oracle_extend(h3, rest)
                    if col is not None:
                        col[x] = c
                        run.note("seed " + " ".join(f"{z}:{seeds[z]}" for z in sorted(seeds)))
                        return col
                run.note("oracle no hamburger seed extends")
                return None

    for t in h.triangles:
        w = tip(h, t)
        if w is not None and w not in (u, v) and h.n > 4:
            run.note(f"reduction delete-tip {w}")
            sub = h.delete_vertex(w)
            col = _same_color_core(sub, u, v, c, run, depth + 1)
            if col is None:
                return None
            if not _reinstate(h, col, [w]):
                run.note(f"reinstate {w} failed")
                return None
            run.note(f"reinstate {w}:{col[w]}")
            return col

    try:
        psi = algorithm1(h, u, v)
    except AdjustmentFailed as e:
        run.chain = ChainRun(h, u, v, "adjustment-failed")
        run.note(f"fallback adjustment-failed face {' '.join(map(str, e.face))}")
        return None
    ids = " ".join(f"{m.map_id}@{m.anchor if m.anchor is not None else '-'}{'' if m.direction is None else m.direction}"
                   for m in psi.maps_used)
    run.note(f"chain-coloring maps {ids}")
    run.partial = psi.to_colors(psi.assignment[u], c)
    run.chain = ChainRun(h, u, v, "ok")
    total = complete_by_hom(h, psi)
    run.note("complete remaining faces by tables")
    return total.to_colors(psi.assignment[u], c)


# ---------------------------------------------------------------- dispatch

def _require(g, pre, k, max_triangles):
    _check_instance(g, pre)
    if len(pre) != k:
        raise PreconditionViolated(f"needs exactly {k} precolored vertices")
    if g.triangle_count > max_triangles:
        raise PreconditionViolated(f"graph has {g.triangle_count} triangles, at most {max_triangles} allowed")


def extend(instance: ExtensionInstance) -> ExtensionResult:
    g, pre = instance.g, dict(instance.precolored)
    validate(g)
    _check_instance(g, pre)
    t = g.triangle_count
    run = _Run(g, pre)
    run.note(f"instance n={g.n} chords={len(g.chords)} triangles={t} precolored={len(pre)}")
    if len(pre) not in (2, 3):
        msg = f"{len(pre)} precolored vertices; only 2 or 3 are covered"
        run.note("not-covered " + msg)
        return ExtensionResult(NOT_COVERED, None, run.trace, diagnostic=msg)
    limit = 1 if len(pre) == 3 else 2
    if t > limit:
        raise PreconditionViolated(f"{t} triangles; at most {limit} allowed with {len(pre)} precolored vertices")

    if _oracle_only():
        run.note("mode oracle-only")
        return run.finish(None)

    if len(pre) == 3:
        k = len(set(pre.values()))
        op = {3: case_distinct, 1: case_same, 2: case_two_one}[k]
        return op(g, pre, run)

    (u, cu), (v, cv) = sorted(pre.items())
    for a, b in diamond_apex_pairs(g):
        if {a, b} == {u, v}:
            if cu != cv:
                run.note(f"obstruction diamond apexes {a} {b} colored differently")
                n = count_extensions(g, pre)
                run.note(f"oracle count_extensions {n}")
                assert n == 0
                return ExtensionResult(INFEASIBLE, None, run.trace,
                                       witness=f"diamond apexes {a} {b} need equal colors")
        elif {a, b} & {u, v}:
            run.note(f"condition pair touches diamond {a} {b} in one vertex")
    if cu != cv:
        return case_two_triangles_distinct(g, pre, run)
    return case_two_triangles_same(g, pre, run)


def extend_connected(g1: ConnectedOuterplane, precolored: Mapping[int, int]) -> ExtensionResult:
    """Extension on a connected (possibly not biconnected) outerplane graph via augmentation."""
    pre = dict(precolored)
    for a, b in itertools.combinations(sorted(pre), 2):
        if edge(a, b) in set(g1.edges):
            raise PreconditionViolated(f"precolored vertices {a} and {b} are adjacent")
    aug = augment_to_biconnected(g1, itertools.combinations(sorted(pre), 2))
    res = extend(ExtensionInstance(aug.graph, pre))
    res.certificate.insert(0, f"augment +E{len(aug.added_edges)} +V{len(aug.added_vertices)}")
    if res.coloring is not None:
        res.coloring = {v: res.coloring[v] for v in g1.vertices}
        bad = check_coloring(EdgeListGraph(g1.vertices, g1.edges), res.coloring, pre)
        assert bad is None, bad
    return res
