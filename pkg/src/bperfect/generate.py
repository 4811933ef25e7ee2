"""Exhaustive enumeration of small graphs and random test-graph generators."""
from __future__ import annotations

import random
from typing import Callable, Iterator

from .errors import TooLarge
from .graph import Graph, invariant, isomorphism

ENUMERATE_MAX_N = 8


def _augment(g: Graph) -> Iterator[Graph]:
    n = g.n
    for s in range(1 << n):
        adj = [a | ((s >> v & 1) << n) for v, a in enumerate(g.adj)]
        adj.append(s)
        yield Graph(n + 1, adj)


def graphs_of_order(n: int, previous: list[Graph] | None = None) -> list[Graph]:
    """One representative per isomorphism class on exactly ``n`` vertices."""
    if n > ENUMERATE_MAX_N:
        raise TooLarge(f"enumeration limited to n <= {ENUMERATE_MAX_N}")
    if n == 0:
        return [Graph(0)]
    if previous is None:
        previous = graphs_of_order(n - 1)
    out: list[Graph] = []
    buckets: dict = {}
    for g in previous:
        for h in _augment(g):
            key = invariant(h)
            bucket = buckets.setdefault(key, [])
            if any(isomorphism(h, other) is not None for other in bucket):
                continue
            bucket.append(h)
            out.append(h)
    return out


def enumerate_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """All non-isomorphic graphs with ``min_n <= n <= max_n``, smallest order first."""
    if max_n > ENUMERATE_MAX_N:
        raise TooLarge(f"enumeration limited to n <= {ENUMERATE_MAX_N}")
    level = [Graph(0)]
    if min_n <= 0:
        yield from level
    for n in range(1, max_n + 1):
        level = graphs_of_order(n, level)
        if n >= min_n:
            yield from level


# ------------------------------------------------------------------ random

def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if rng.random() < p])


def random_relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def grow_random(n: int, accept: Callable[[Graph], bool], rng: random.Random,
                tries_per_vertex: int = 50, max_restarts: int = 100) -> Graph:
    """Add vertices one at a time with random neighbourhoods, rejecting any
    extension for which ``accept`` fails. ``accept`` must be hereditary."""
    for _ in range(max_restarts):
        g = Graph(0)
        p = rng.uniform(0.15, 0.85)
        while g.n < n:
            for _ in range(tries_per_vertex):
                s = sum(1 << v for v in range(g.n) if rng.random() < p)
                adj = [a | ((s >> v & 1) << g.n) for v, a in enumerate(g.adj)] + [s]
                h = Graph(g.n + 1, adj)
                if accept(h):
                    g = h
                    break
            else:
                break
        if g.n == n:
            return g
    raise RuntimeError(f"could not grow an accepted graph on {n} vertices")


def random_f_free(n: int, rng: random.Random) -> Graph:
    from .forbidden import is_b_perfect
    return grow_random(n, is_b_perfect, rng)


def random_weakly_chordal(n: int, rng: random.Random) -> Graph:
    from .chordality import is_weakly_chordal
    return grow_random(n, is_weakly_chordal, rng)


def random_special_boat(rng: random.Random, max_q: int = 4, max_part: int = 3,
                        shuffle: bool = True) -> tuple[Graph, list[list[int]], list[list[int]]]:
    """A random special boat with its parts (``A[0]`` is A0), vertex labels shuffled."""
    q = rng.randint(2, max_q)
    lo0 = 1 if q == 2 else 0
    sizes_a = [rng.randint(lo0, max_part)] + [rng.randint(1, max_part) for _ in range(q)]
    sizes_b = [rng.randint(lo0, max_part)] + [rng.randint(1, max_part) for _ in range(q)]
    n = sum(sizes_a) + sum(sizes_b)
    perm = list(range(n))
    if shuffle:
        rng.shuffle(perm)
    it = iter(perm)
    a = [[next(it) for _ in range(s)] for s in sizes_a]
    b = [[next(it) for _ in range(s)] for s in sizes_b]
    edges = set()
    for side in (a, b):
        whole = [v for part in side for v in part]
        for i, u in enumerate(whole):
            for v in whole[i + 1:]:
                edges.add((min(u, v), max(u, v)))
    for j in range(1, q + 1):
        for u in a[j]:
            for v in b[j]:
                edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges)), a, b

