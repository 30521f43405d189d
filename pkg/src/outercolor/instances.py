"""Exhaustive and random generation of biconnected outerplane graphs.

Vertices are always 1..n along the outer cycle.  Canonical representatives
are the lexicographically least chord set over the 2n dihedral relabelings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InfeasibleSpec
from .graph import Edge, OuterplaneGraph, edge

DEFAULT_CAP = 10


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    triangle_count: Optional[int] = None
    canonical: bool = True
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if not 3 <= self.n <= self.cap:
            raise ValueError(f"n={self.n} outside 3..{self.cap}")


def _candidate_chords(n: int) -> list[Edge]:
    return [(a, b) for a in range(1, n + 1) for b in range(a + 2, n + 1)
            if not (a == 1 and b == n)]


def _cross(c1: Edge, c2: Edge) -> bool:
    a, b = c1
    c, d = c2
    return a < c < b < d or c < a < d < b


def chord_sets(n: int) -> Iterator[tuple[Edge, ...]]:
    """Every non-crossing chord set of the n-cycle 1..n (include-first order)."""
    cands = _candidate_chords(n)
    cur: list[Edge] = []

    def rec(i):
        if i == len(cands):
            yield tuple(cur)
            return
        c = cands[i]
        if all(not _cross(c, x) for x in cur):
            cur.append(c)
            yield from rec(i + 1)
            cur.pop()
        yield from rec(i + 1)

    yield from rec(0)


def dihedral_images(n: int, chords) -> Iterator[tuple[Edge, ...]]:
    for shift in range(n):
        for flip in (False, True):
            def m(v):
                w = (v - 1 + shift) % n
                if flip:
                    w = (-w) % n
                return w + 1
            yield tuple(sorted(edge(m(a), m(b)) for a, b in chords))


def canonical_chords(n: int, chords) -> tuple[Edge, ...]:
    return min(dihedral_images(n, chords))


def _triangle_count(n: int, chords) -> int:
    return OuterplaneGraph(tuple(range(1, n + 1)), chords).triangle_count


def enumerate_instances(spec: EnumerationSpec) -> Iterator[OuterplaneGraph]:
    """All graphs on the n-cycle with the requested triangle count, sorted by chord set."""
    n = spec.n
    found = []
    for chords in chord_sets(n):
        chords = tuple(sorted(chords))
        if spec.canonical and canonical_chords(n, chords) != chords:
            continue
        if spec.triangle_count is not None and _triangle_count(n, chords) != spec.triangle_count:
            continue
        found.append(chords)
    found.sort(key=lambda c: (len(c), c))
    for chords in found:
        yield OuterplaneGraph(tuple(range(1, n + 1)), chords)


def _split(poly, i, j):
    return poly[i:j + 1], poly[j:] + poly[:i + 1]


def random_instance(n: int, triangle_count: int, seed: int = 0, retries: int = 200) -> OuterplaneGraph:
    """A reproducible random graph on the n-cycle with exactly ``triangle_count`` 3-faces."""
    if n < 3 or triangle_count < 0:
        raise InfeasibleSpec(n, triangle_count)
    if n == 3:
        if triangle_count != 1:
            raise InfeasibleSpec(n, triangle_count)
        return OuterplaneGraph((1, 2, 3))
    if n <= 7:
        pool = list(enumerate_instances(EnumerationSpec(n, triangle_count, canonical=False)))
        if not pool:
            raise InfeasibleSpec(n, triangle_count)
        return pool[random.Random(seed).randrange(len(pool))]
    if triangle_count > n - 2:
        raise InfeasibleSpec(n, triangle_count)

    rng = random.Random(seed)
    for _ in range(retries):
        chords = _random_chords(n, triangle_count, rng)
        if chords is not None:
            g = OuterplaneGraph.build(range(1, n + 1), chords)
            assert g.triangle_count == triangle_count
            return g
    raise InfeasibleSpec(n, triangle_count)


def _random_chords(n: int, t: int, rng: random.Random) -> Optional[list[Edge]]:
    polys = [list(range(1, n + 1))]
    chords: list[Edge] = []
    density = rng.random()

    def safe_splits(rounds):
        for _ in range(rounds):
            big = [p for p in polys if len(p) >= 6]
            if not big or rng.random() > density:
                return
            p = rng.choice(big)
            k = len(p)
            i = rng.randrange(k)
            gap = rng.randrange(3, k - 2)
            rot = p[i:] + p[:i]
            a, b = _split(rot, 0, gap)
            polys.remove(p)
            polys.extend([a, b])
            chords.append(edge(rot[0], rot[gap]))

    safe_splits(rng.randrange(n))
    budget = t
    while budget:
        opts = [(p, 1) for p in polys if len(p) >= 5]
        if budget >= 2:
            opts += [(p, 2) for p in polys if len(p) == 4]
        if not opts:
            return None
        p, cost = rng.choice(opts)
        k = len(p)
        i = rng.randrange(k)
        rot = p[i:] + p[:i]
        ear, rest = _split(rot, 0, 2)
        polys.remove(p)
        polys.extend([ear, rest])
        chords.append(edge(rot[0], rot[2]))
        budget -= cost
    safe_splits(rng.randrange(n))
    return chords
