"""Weak chordality: hole/antihole search, two-pairs, and maximum cliques.

A weakly chordal graph has no induced cycle of length >= 5 in either
itself or its complement. Every weakly chordal graph that is not a clique
has a two-pair, and contracting a two-pair keeps the graph weakly chordal
without changing the clique number, so contracting until a clique remains
and unwinding the contractions yields a maximum clique.
"""
from __future__ import annotations

from .errors import NotWeaklyChordal
from .graph import Graph, bits, complement, component_masks
from .oracles import max_clique

HOLE, ANTIHOLE = "hole", "antihole"


def is_c5(g: Graph) -> bool:
    return (g.n == 5 and g.m == 5 and all(d == 2 for d in g.degrees())
            and len(component_masks(g)) == 1)


def find_long_induced_cycle(g: Graph, min_length: int = 5) -> list[int] | None:
    """An induced cycle with at least ``min_length`` vertices, listed in cycle order."""
    adj = g.adj
    n = g.n
    for s in range(n):
        higher = g.all_mask & ~((1 << (s + 1)) - 1)
        path = [s]
        found = _extend(adj, path, 1 << s, 0, higher, min_length)
        if found:
            return found
    return None


def _extend(adj, path, on_path, blocked, higher, min_length):
    # path is an induced path from path[0]; blocked holds every path vertex but the last
    s = path[0]
    last = path[-1]
    interior = blocked & ~(1 << s)
    for v in bits(adj[last] & higher & ~on_path):
        if adj[v] & interior:
            continue
        if len(path) > 1 and adj[v] >> s & 1:
            if len(path) + 1 >= min_length:
                return path + [v]
            continue
        path.append(v)
        found = _extend(adj, path, on_path | 1 << v, blocked | (1 << last), higher, min_length)
        path.pop()
        if found:
            return found
    return None


def find_hole_or_antihole(g: Graph) -> tuple[str, list[int]] | None:
    """A hole or antihole of length >= 5 with its vertices in cycle order, or None."""
    cyc = find_long_induced_cycle(g)
    if cyc is not None:
        return HOLE, cyc
    cyc = find_long_induced_cycle(complement(g))
    if cyc is not None:
        return ANTIHOLE, cyc
    return None


def is_weakly_chordal(g: Graph) -> bool:
    return find_hole_or_antihole(g) is None


def _two_pair(adj, alive: int) -> tuple[int, int] | None:
    for x in bits(alive):
        others = alive & ~adj[x] & ~((1 << (x + 1)) - 1)
        for y in bits(others):
            if not _reach(adj, x, alive & ~(adj[x] & adj[y])) >> y & 1:
                return x, y
    return None


def find_two_pair(g: Graph) -> tuple[int, int] | None:
    """Smallest non-adjacent ``(x, y)`` separated by removing their common neighbours."""
    return _two_pair(g.adj, g.all_mask)


def is_two_pair(g: Graph, x: int, y: int) -> bool:
    if x == y or g.has_edge(x, y):
        return False
    common = g.adj[x] & g.adj[y]
    return not _reach(g.adj, x, g.all_mask & ~common) >> y & 1


def _reach(adj, x: int, scope: int) -> int:
    comp = 1 << x
    frontier = comp
    while frontier:
        r = 0
        for v in bits(frontier):
            r |= adj[v]
        frontier = r & scope & ~comp
        comp |= frontier
    return comp


def weakly_chordal_max_clique(g: Graph, method: str = "two-pair", check: bool = False,
                              trace: list | None = None) -> int:
    """Maximum clique (bitmask) of a weakly chordal graph.

    ``method="two-pair"`` contracts two-pairs; ``"branch-and-bound"`` is the
    exact solver, kept for differential testing. ``check`` verifies weak
    chordality first. ``trace``, if given, receives the contracted pairs.
    """
    if check and not is_weakly_chordal(g):
        raise NotWeaklyChordal("input has a hole or antihole of length >= 5")
    if method == "branch-and-bound":
        return max_clique(g)
    if method != "two-pair":
        raise ValueError(f"unknown method {method!r}")
    adj = list(g.adj)
    alive = g.all_mask
    history = []
    while True:
        if all(not (alive & ~adj[v] & ~(1 << v)) for v in bits(alive)):
            break
        pair = _two_pair(adj, alive)
        if pair is None:
            raise NotWeaklyChordal("non-clique graph without a two-pair")
        x, y = pair
        history.append((x, y, adj[x], adj[y]))
        if trace is not None:
            trace.append((x, y))
        merged = (adj[x] | adj[y]) & ~((1 << x) | (1 << y))
        for u in bits(adj[y]):
            adj[u] = (adj[u] & ~(1 << y)) | (1 << x)
        for u in bits(merged):
            adj[u] |= 1 << x
        adj[x] = merged
        adj[y] = 0
        alive &= ~(1 << y)
    clique = alive
    for x, y, nx, ny in reversed(history):
        if clique >> x & 1:
            rest = clique & ~(1 << x)
            if rest & ~nx == 0:
                continue
            if rest & ~ny == 0:
                clique = rest | 1 << y
                continue
            raise NotWeaklyChordal("contracted clique does not lift to either vertex of the two-pair")
    assert g.is_clique(clique)
    return clique

