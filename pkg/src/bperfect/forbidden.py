"""The 22 minimal obstructions to b-perfection and induced-subgraph search.

A graph is b-perfect exactly when it contains none of F1..F22 as an
induced subgraph, which gives a polynomial recognizer (each pattern has at
most ten vertices).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph, bits, popcount

# Edge lists read off the coordinate drawings, vertex order = drawing order.
_FAMILY_EDGES: dict[int, tuple[int, list[tuple[int, int]]]] = {
    1: (5, [(0, 3), (1, 3), (1, 4), (2, 4)]),
    2: (7, [(0, 4), (1, 4), (2, 5), (3, 6), (5, 6)]),
    3: (9, [(0, 6), (1, 7), (2, 8), (3, 6), (4, 7), (5, 8)]),
    4: (6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 5), (2, 3), (2, 4), (3, 5)]),
    5: (7, [(0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (2, 5), (3, 4), (3, 5), (3, 6),
            (4, 6)]),
    6: (8, [(0, 2), (0, 4), (1, 3), (1, 5), (2, 4), (2, 6), (3, 5), (3, 7), (4, 6),
            (5, 7)]),
    7: (8, [(0, 2), (0, 4), (1, 3), (1, 5), (2, 4), (2, 6), (3, 4), (3, 5), (3, 7),
            (4, 6), (5, 7)]),
    8: (8, [(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6),
            (5, 7), (6, 7)]),
    9: (10, [(0, 1), (0, 6), (1, 2), (1, 6), (2, 6), (3, 4), (3, 6), (4, 5), (4, 6),
             (5, 6), (6, 7), (7, 8), (7, 9), (8, 9)]),
    10: (6, [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5),
             (4, 5)]),
    11: (7, [(0, 2), (0, 3), (0, 5), (1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 4),
             (3, 5), (3, 6), (4, 6)]),
    12: (8, [(0, 1), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3), (2, 6), (2, 7), (3, 6),
             (4, 5), (5, 6), (6, 7)]),
    13: (8, [(0, 1), (0, 4), (0, 5), (1, 2), (1, 4), (1, 6), (2, 3), (2, 5), (2, 7),
             (3, 6), (3, 7), (4, 5), (5, 6), (6, 7)]),
    14: (8, [(0, 1), (0, 4), (0, 6), (1, 2), (1, 5), (1, 6), (2, 3), (2, 4), (2, 7),
             (3, 5), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7)]),
    15: (8, [(0, 1), (0, 2), (0, 4), (0, 6), (1, 3), (1, 5), (1, 7), (2, 3), (2, 5),
             (2, 6), (3, 4), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7)]),
    16: (6, [(0, 1), (0, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]),
    17: (6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]),
    18: (8, [(0, 1), (0, 2), (0, 4), (1, 3), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4),
             (3, 5), (3, 6), (4, 7), (6, 7)]),
    19: (8, [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6), (2, 7), (3, 6),
             (3, 7), (4, 6), (4, 7), (5, 6), (5, 7)]),
    20: (8, [(0, 1), (0, 3), (0, 4), (1, 2), (1, 6), (2, 3), (2, 4), (2, 5), (3, 6),
             (3, 7), (4, 5), (4, 7), (5, 6), (6, 7)]),
    21: (8, [(0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 4), (2, 5),
             (3, 6), (3, 7), (4, 5), (4, 7), (5, 6), (6, 7)]),
    22: (8, [(0, 1), (0, 2), (0, 4), (0, 6), (1, 3), (1, 5), (1, 6), (2, 3), (2, 7),
             (3, 4), (3, 7), (4, 5), (4, 7), (5, 7), (6, 7)]),
}

_ALIASES = {
    1: "P5",
    2: "P3 + P4",
    3: "3P3",
    10: "complement of P6",
}

# Small boats. Vertex labels: q=2 -> A0 A1 A2 B0 B1 B2; q=3 -> A1 A2 A3 B1 B2 B3.
SMALL_BOAT_Q2_PARTS = ((0,), (1,), (2,)), ((3,), (4,), (5,))
SMALL_BOAT_Q3_PARTS = ((), (0,), (1,), (2,)), ((), (3,), (4,), (5,))
_SMALL_BOAT_EDGES = (
    [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (1, 4), (2, 5)],
    [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
)


@dataclass(frozen=True)
class ForbiddenPattern:
    index: int
    name: str
    graph: Graph
    aliases: tuple[str, ...] = field(default=())

    @property
    def order(self) -> int:
        return self.graph.n


@lru_cache(maxsize=None)
def _family() -> tuple[ForbiddenPattern, ...]:
    out = []
    for i in range(1, 23):
        n, edges = _FAMILY_EDGES[i]
        alias = (_ALIASES[i],) if i in _ALIASES else ()
        out.append(ForbiddenPattern(i, f"F{i}", Graph.from_edges(n, edges), alias))
    return tuple(out)


def family() -> list[ForbiddenPattern]:
    """F1..F22 in index order (``family()[0]`` is F1)."""
    return list(_family())


def small_boats() -> list[Graph]:
    """The q=2 small boat (8 edges) and the q=3 small boat (complement of C6)."""
    return [Graph.from_edges(6, e) for e in _SMALL_BOAT_EDGES]


def _search_order(pattern: Graph) -> list[int]:
    order: list[int] = []
    placed = 0
    left = set(pattern.vertices())
    while left:
        v = min(left, key=lambda x: (-popcount(pattern.adj[x] & placed), -pattern.degree(x), x))
        order.append(v)
        placed |= 1 << v
        left.discard(v)
    return order


def iter_induced(host: Graph, pattern: Graph, within: int | None = None):
    """Yield every induced embedding of ``pattern`` into ``host[within]``.

    An embedding is a tuple ``e`` with ``e[p]`` the host vertex for pattern vertex ``p``.
    """
    k = pattern.n
    scope = host.all_mask if within is None else within
    if k > popcount(scope):
        return
    if k == 0:
        yield ()
        return
    order = _search_order(pattern)
    hdeg = [popcount(a & scope) for a in host.adj]
    pdeg = pattern.degrees()
    deg_ok = [0] * k
    for p in range(k):
        m = 0
        for w in bits(scope):
            if hdeg[w] >= pdeg[p]:
                m |= 1 << w
        deg_ok[p] = m
    emb = [-1] * k
    # earlier[i] = list of (position j < i, adjacent?) for pattern vertex order[i]
    earlier = [[(order[j], pattern.has_edge(order[i], order[j])) for j in range(i)]
               for i in range(k)]

    def rec(i: int, used: int):
        if i == k:
            yield tuple(emb)
            return
        p = order[i]
        cand = deg_ok[p] & ~used
        for q, adjacent in earlier[i]:
            w = emb[q]
            if adjacent:
                cand &= host.adj[w]
            else:
                cand &= ~host.adj[w]
            if not cand:
                return
        for w in bits(cand):
            emb[p] = w
            yield from rec(i + 1, used | 1 << w)
        emb[p] = -1

    yield from rec(0, 0)


def find_induced(host: Graph, pattern: Graph, within: int | None = None) -> tuple[int, ...] | None:
    """Some induced embedding of ``pattern`` in ``host``, or None."""
    return next(iter_induced(host, pattern, within), None)


def is_induced_embedding(host: Graph, pattern: Graph, emb) -> bool:
    """Check injectivity and that edges and non-edges are both preserved."""
    if len(emb) != pattern.n or len(set(emb)) != len(emb):
        return False
    if any(not 0 <= w < host.n for w in emb):
        return False
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            if pattern.has_edge(a, b) != host.has_edge(emb[a], emb[b]):
                return False
    return True


def find_forbidden(g: Graph, indices=None) -> tuple[int, tuple[int, ...]] | None:
    """Lowest-index pattern occurring in ``g`` with a witness embedding, or None.

    ``indices`` restricts the scan to a subset of 1..22.
    """
    for pat in _family():
        if indices is not None and pat.index not in indices:
            continue
        if pat.order > g.n:
            continue
        emb = find_induced(g, pat.graph)
        if emb is not None:
            return pat.index, emb
    return None


def is_b_perfect(g: Graph) -> bool:
    """True iff ``g`` has no induced F1..F22."""
    return find_forbidden(g) is None
