"""Exact 3-coloring extension oracle.

Two independent routes:

* outerplane graphs: dynamic programming over the weak dual tree, the state
  on each dual edge being the ordered color pair of the shared chord;
* arbitrary (auxiliary) graphs given as an edge list: backtracking with
  forward checking, most-constrained vertex first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .graph import Edge, Face, OuterplaneGraph, edge, weak_dual

COLORS = (1, 2, 3)
Coloring = dict


@dataclass(frozen=True)
class EdgeListGraph:
    """A plain simple graph; used for auxiliary graphs that are not outerplane."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        object.__setattr__(self, "edges", tuple(sorted({edge(a, b) for a, b in self.edges})))

    @classmethod
    def of(cls, g) -> "EdgeListGraph":
        return cls(tuple(g.vertices), tuple(g.edges))

    @property
    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def _allowed(vertices, precolored, lists=None) -> Optional[dict[int, tuple[int, ...]]]:
    allowed = {}
    for v in vertices:
        dom = COLORS if lists is None or v not in lists else tuple(sorted(lists[v]))
        if v in precolored:
            dom = (precolored[v],) if precolored[v] in dom else ()
        allowed[v] = dom
    return allowed


def _precolor_ok(g, precolored: Mapping[int, int]) -> bool:
    verts = set(g.vertices)
    for v, c in precolored.items():
        if v not in verts:
            raise KeyError(f"precolored vertex {v} not in graph")
        if c not in COLORS:
            raise ValueError(f"color {c} of vertex {v} not in {{1,2,3}}")
    return all(precolored[a] != precolored[b] for a, b in g.edges
               if a in precolored and b in precolored)


# ---------------------------------------------------------------- tree DP

class _DualDP:
    def __init__(self, g: OuterplaneGraph, allowed: dict[int, tuple[int, ...]]):
        self.g = g
        self.ok = {v: [c in dom for c in (0, 1, 2, 3)] for v, dom in allowed.items()}
        dual = weak_dual(g)
        self.faces = dual.nodes
        adj: dict[int, list[tuple[int, Edge]]] = {i: [] for i in range(len(self.faces))}
        for a, b, c in dual.edges:
            adj[a].append((b, c))
            adj[b].append((a, c))
        # root at face 0; iterative DFS for post-order
        self.parent_chord: dict[int, Optional[Edge]] = {0: None}
        self.children: dict[int, list[tuple[int, Edge]]] = {i: [] for i in adj}
        order, stack = [], [0]
        while stack:
            x = stack.pop()
            order.append(x)
            for y, c in adj[x]:
                if y not in self.parent_chord:
                    self.parent_chord[y] = c
                    self.children[x].append((y, c))
                    stack.append(y)
        self.order = order
        self.table: dict[int, list[list[int]]] = {}
        self.lists: dict[int, list[int]] = {}
        for f in reversed(order):
            self._solve(f)

    def _rotated(self, f: int) -> list[int]:
        vs = list(self.faces[f].vertices)
        pc = self.parent_chord[f]
        if pc is None:
            return vs
        k = len(vs)
        for j in range(k):
            if edge(vs[j], vs[(j + 1) % k]) == pc:
                return vs[j + 1:] + vs[:j + 1]
        raise AssertionError("parent chord not on face")

    def _edge_weight(self, f: int):
        """Weights on the path edges L[i]-L[i+1] and on the closing edge."""
        child = {c: ch for ch, c in self.children[f]}
        L = self.lists[f]
        k = len(L)
        ws = []
        for i in range(k):
            a, b = L[i], L[(i + 1) % k]
            e = edge(a, b)
            if e in child:
                t = self.table[child[e]]
                if a == e[0]:
                    ws.append(t)
                else:
                    ws.append([[t[y][x] for y in range(4)] for x in range(4)])
            else:
                ws.append(None)
        return ws

    def _path_counts(self, L, ws, c0):
        """vec[i][c]: weighted count of colorings of L[0..i] with L[0]=c0, L[i]=c."""
        ok = self.ok
        vec = [0, 0, 0, 0]
        vec[c0] = 1 if ok[L[0]][c0] else 0
        vecs = [vec]
        for i in range(len(L) - 1):
            w = ws[i]
            nxt = [0, 0, 0, 0]
            okn = ok[L[i + 1]]
            for c in COLORS:
                if not vec[c]:
                    continue
                for d in COLORS:
                    if d != c and okn[d]:
                        nxt[d] += vec[c] * (1 if w is None else w[c][d])
            vec = nxt
            vecs.append(vec)
        return vecs

    def _solve(self, f: int):
        L = self._rotated(f)
        self.lists[f] = L
        ws = self._edge_weight(f)
        # T[ca][cb] with ca the color of the smaller endpoint of the parent chord
        T = [[0] * 4 for _ in range(4)]
        closing = ws[-1]
        for c0 in COLORS:
            vecs = self._path_counts(L, ws, c0)
            for cl in COLORS:
                if cl == c0:
                    continue
                val = vecs[-1][cl]
                if self.parent_chord[f] is None and closing is not None:
                    val *= closing[cl][c0]
                a, b = L[0], L[-1]
                if a < b:
                    T[c0][cl] = val
                else:
                    T[cl][c0] = val
        self.table[f] = T

    def count(self) -> int:
        T = self.table[0]
        return sum(T[a][b] for a in COLORS for b in COLORS)

    def witness(self) -> Optional[dict[int, int]]:
        if self.count() == 0:
            return None
        col: dict[int, int] = {}
        L0 = self.lists[0]
        T = self.table[0]
        a, b = L0[0], L0[-1]
        for c0 in COLORS:
            for cl in COLORS:
                val = T[c0][cl] if a < b else T[cl][c0]
                if val:
                    break
            if val:
                break
        col[L0[0]], col[L0[-1]] = c0, cl
        stack = [0]
        while stack:
            f = stack.pop()
            self._fill(f, col)
            stack.extend(ch for ch, _ in self.children[f])
        return col

    def _fill(self, f: int, col: dict[int, int]):
        L = self.lists[f]
        ws = self._edge_weight(f)
        c0, cl = col[L[0]], col[L[-1]]
        k = len(L)
        # backward counts from the fixed end
        back = [None] * k
        back[k - 1] = [0, 0, 0, 0]
        back[k - 1][cl] = 1
        for i in range(k - 2, -1, -1):
            w = ws[i]
            okn = self.ok[L[i]]
            cur = [0, 0, 0, 0]
            for c in COLORS:
                if not okn[c]:
                    continue
                cur[c] = sum(back[i + 1][d] * (1 if w is None else w[c][d])
                             for d in COLORS if d != c)
            back[i] = cur
        for i in range(1, k - 1):
            prev = col[L[i - 1]]
            w = ws[i - 1]
            for d in COLORS:
                if d != prev and back[i][d] and (w is None or w[prev][d]):
                    col[L[i]] = d
                    break
            else:
                raise AssertionError("DP reconstruction dead end")


# ---------------------------------------------------------------- backtracking

def _backtrack(adj: dict[int, set[int]], allowed: dict[int, tuple[int, ...]], count: bool):
    domains = {v: set(d) for v, d in allowed.items()}
    if any(not d for d in domains.values()):
        return 0 if count else None
    order_key = {v: (-len(adj[v]), v) for v in adj}
    assignment: dict[int, int] = {}
    total = 0

    def pick():
        best, bkey = None, None
        for v in domains:
            if v in assignment:
                continue
            key = (len(domains[v]), order_key[v])
            if bkey is None or key < bkey:
                best, bkey = v, key
        return best

    def rec():
        nonlocal total
        v = pick()
        if v is None:
            if count:
                total += 1
                return False
            return True
        for c in sorted(domains[v]):
            removed = []
            wiped = False
            for w in adj[v]:
                if w not in assignment and c in domains[w]:
                    domains[w].discard(c)
                    removed.append(w)
                    if not domains[w]:
                        wiped = True
            assignment[v] = c
            if not wiped and rec():
                return True
            del assignment[v]
            for w in removed:
                domains[w].add(c)
        return False

    found = rec()
    if count:
        return total
    return dict(assignment) if found else None


# ---------------------------------------------------------------- public API

def _query(graph, precolored, lists):
    precolored = dict(precolored or {})
    if not _precolor_ok(graph, precolored):
        return precolored, None
    return precolored, _allowed(graph.vertices, precolored, lists)


def oracle_extend(graph, precolored: Mapping[int, int] | None = None,
                  lists: Mapping[int, Iterable[int]] | None = None) -> Optional[dict[int, int]]:
    """A proper total 3-coloring agreeing with ``precolored``, or None.

    ``lists`` optionally restricts the admissible colors per vertex.
    """
    precolored, allowed = _query(graph, precolored, lists)
    if allowed is None:
        return None
    if isinstance(graph, OuterplaneGraph):
        col = _DualDP(graph, allowed).witness()
    else:
        col = _backtrack(EdgeListGraph.of(graph).adjacency, allowed, count=False)
    if col is None:
        return None
    return {v: col[v] for v in sorted(col)}


def count_extensions(graph, precolored: Mapping[int, int] | None = None,
                     lists: Mapping[int, Iterable[int]] | None = None) -> int:
    precolored, allowed = _query(graph, precolored, lists)
    if allowed is None:
        return 0
    if isinstance(graph, OuterplaneGraph):
        return _DualDP(graph, allowed).count()
    return _backtrack(EdgeListGraph.of(graph).adjacency, allowed, count=True)


def check_coloring(graph, coloring: Mapping[int, int],
                   precolored: Mapping[int, int] | None = None) -> Optional[str]:
    """None if ``coloring`` is a total proper 3-coloring matching the precolors,
    otherwise a short description of the first violation."""
    for v in graph.vertices:
        if v not in coloring:
            return f"incomplete: vertex {v} uncolored"
        if coloring[v] not in COLORS:
            return f"vertex {v} has color {coloring[v]} outside 1..3"
    for a, b in graph.edges:
        if coloring[a] == coloring[b]:
            return f"edge {a} {b} both colored {coloring[a]}"
    for v, c in (precolored or {}).items():
        if coloring.get(v) != c:
            return f"precolor {v} {c} not respected (got {coloring.get(v)})"
    return None


def face_completions(face: Face, partial: Mapping[int, int]) -> Iterable[dict[int, int]]:
    """All proper colorings of a face cycle extending ``partial`` (lexicographic)."""
    vs = face.vertices
    k = len(vs)
    col: dict[int, int] = {}

    def rec(i):
        if i == k:
            if col[vs[0]] != col[vs[-1]]:
                yield dict(col)
            return
        v = vs[i]
        for c in ((partial[v],) if v in partial else COLORS):
            if i and col[vs[i - 1]] == c:
                continue
            col[v] = c
            yield from rec(i + 1)
            del col[v]

    yield from rec(0)
