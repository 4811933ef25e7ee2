"""Exact, exhaustive solvers used as ground truth.

None of these scale: they exist to validate the fast algorithms at desk
size. Each solver has a node budget and raises ``TooLarge`` instead of
running away on a big input.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

from .errors import ImproperColoring, SizeMismatch, TooLarge
from .graph import Graph, bits, induced_subgraph, invariant, isomorphism, popcount

DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class Coloring:
    """Colors ``1..k`` per vertex; every color in ``1..k`` must be used."""

    colors: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", cols)
        if cols:
            k = max(cols)
            if min(cols) < 1 or len(set(cols)) != k:
                raise ValueError("colors must be exactly 1..k with every color used")

    @classmethod
    def normalized(cls, colors: Sequence[int]) -> "Coloring":
        """Renumber arbitrary labels to 1..k, preserving their relative order."""
        mapping = {c: i + 1 for i, c in enumerate(sorted(set(colors)))}
        return cls(tuple(mapping[c] for c in colors))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def classes(self) -> dict[int, int]:
        """Color -> bitmask of the vertices holding it."""
        out = {c: 0 for c in range(1, self.k + 1)}
        for v, c in enumerate(self.colors):
            out[c] |= 1 << v
        return out

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


def _check_size(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise SizeMismatch(f"coloring covers {c.n} vertices, graph has {g.n}")


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_size(g, c)
    return all(c.colors[u] != c.colors[v] for u, v in g.edges())


def _b_vertex_masks(g: Graph, c: Coloring) -> dict[int, int]:
    classes = c.classes()
    out = {}
    for col, members in classes.items():
        others = [m for other, m in classes.items() if other != col]
        found = 0
        for v in bits(members):
            nb = g.adj[v]
            if all(nb & m for m in others):
                found |= 1 << v
        out[col] = found
    return out


def b_vertices(g: Graph, c: Coloring) -> dict[int, frozenset[int]]:
    """For each color, the vertices of that color seeing every other color class."""
    if not is_proper(g, c):
        raise ImproperColoring("b-vertices are only defined for proper colorings")
    return {col: frozenset(bits(m)) for col, m in _b_vertex_masks(g, c).items()}


def is_b_coloring(g: Graph, c: Coloring) -> bool:
    _check_size(g, c)
    if not is_proper(g, c):
        return False
    return all(_b_vertex_masks(g, c).values())


# ------------------------------------------------------------- max clique

def max_clique(g: Graph, within: int | None = None, budget: int = DEFAULT_BUDGET) -> int:
    """A maximum clique of ``g[within]`` as a bitmask (branch and bound, coloring bound)."""
    adj = g.adj
    best = 0
    best_size = 0
    nodes = 0

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # greedy sequential coloring; returns (vertex, color index) in ascending color
        order = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(1 << v) & ~adj[v]
                uncolored &= ~(1 << v)
                order.append((v, color))
        return order

    def expand(current: int, size: int, cand: int) -> None:
        nonlocal best, best_size, nodes
        nodes += 1
        if nodes > budget:
            raise TooLarge(f"max clique search exceeded {budget} nodes")
        order = color_bound(cand)
        for v, col in reversed(order):
            if size + col <= best_size:
                return
            newc = cand & adj[v]
            if newc:
                expand(current | 1 << v, size + 1, newc)
            elif size + 1 > best_size:
                best, best_size = current | 1 << v, size + 1
            cand &= ~(1 << v)

    scope = g.all_mask if within is None else within
    if scope:
        expand(0, 0, scope)
    return best


def clique_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    return popcount(max_clique(g, budget=budget))


# ------------------------------------------------------- chromatic number

def _k_coloring(g: Graph, k: int, budget: list[int]) -> list[int] | None:
    """DSATUR-ordered backtracking for a proper coloring with colors 1..k."""
    n = g.n
    col = [0] * n
    # per-vertex bitmask of colors present in the neighbourhood, as counts
    seen = [[0] * (k + 1) for _ in range(n)]

    def pick() -> int:
        best_v, best_key = -1, None
        for v in range(n):
            if col[v]:
                continue
            sat = sum(1 for c in range(1, k + 1) if seen[v][c])
            key = (sat, g.degree(v), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def rec(done: int, used: int) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise TooLarge("chromatic number search exceeded its node budget")
        if done == n:
            return True
        v = pick()
        # symmetry: a fresh color only as the next unused index
        for c in range(1, min(used + 1, k) + 1):
            if seen[v][c]:
                continue
            col[v] = c
            for u in bits(g.adj[v]):
                seen[u][c] += 1
            if rec(done + 1, max(used, c)):
                return True
            for u in bits(g.adj[v]):
                seen[u][c] -= 1
            col[v] = 0
        return False

    return list(col) if rec(0, 0) else None


def optimal_coloring(g: Graph, budget: int = DEFAULT_BUDGET) -> Coloring:
    """A proper coloring with the minimum number of colors."""
    if g.n == 0:
        return Coloring(())
    left = [budget]
    k = max(1, popcount(max_clique(g, budget=budget)))
    while True:
        found = _k_coloring(g, k, left)
        if found is not None:
            return Coloring.normalized(found)
        k += 1


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    return optimal_coloring(g, budget).k


# ---------------------------------------------------- b-chromatic number

def _b_upper_bound(g: Graph) -> int:
    # a b-coloring with k colors needs k vertices of degree >= k-1
    deg = sorted(g.degrees(), reverse=True)
    m = 0
    for i, d in enumerate(deg, 1):
        if d >= i - 1:
            m = i
    return m


def _find_b_coloring(g: Graph, k: int, budget: list[int]) -> list[int] | None:
    """Search canonical (restricted-growth) proper colorings with exactly k colors."""
    n = g.n
    adj = g.adj
    col = [0] * n
    classes = [0] * (k + 1)
    heavy = 0
    for v in range(n):
        if popcount(adj[v]) >= k - 1:
            heavy |= 1 << v

    def is_b() -> bool:
        for c in range(1, k + 1):
            ok = False
            for v in bits(classes[c] & heavy):
                nb = adj[v]
                if all(nb & classes[d] for d in range(1, k + 1) if d != c):
                    ok = True
                    break
            if not ok:
                return False
        return True

    def rec(v: int, used: int) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise TooLarge("b-chromatic search exceeded its node budget")
        if used + (n - v) < k:
            return False
        if v == n:
            return is_b()
        nb = adj[v]
        for c in range(1, min(used + 1, k) + 1):
            if nb & classes[c]:
                continue
            col[v] = c
            classes[c] |= 1 << v
            if rec(v + 1, max(used, c)):
                return True
            classes[c] &= ~(1 << v)
        col[v] = 0
        return False

    return list(col) if rec(0, 0) else None


def b_coloring_witness(g: Graph, budget: int = DEFAULT_BUDGET) -> Coloring:
    """A b-coloring using the maximum possible number of colors."""
    if g.n == 0:
        return Coloring(())
    left = [budget]
    chi = optimal_coloring(g, budget)
    for k in range(_b_upper_bound(g), chi.k, -1):
        found = _find_b_coloring(g, k, left)
        if found is not None:
            return Coloring(tuple(found))
    return chi


def b_chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    return b_coloring_witness(g, budget).k


def has_b_coloring_above_chi(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    return b_chromatic_number(g, budget) > chromatic_number(g, budget)


# ------------------------------------------------------- b-perfection

ORACLE_MAX_N = 10


class _IsoMemo:
    """Verdict cache keyed by isomorphism class (invariant bucket + exact test)."""

    def __init__(self):
        self._buckets: dict = {}
        self._lock = threading.Lock()

    def get(self, g: Graph):
        key = invariant(g)
        with self._lock:
            bucket = list(self._buckets.get(key, ()))
        for h, verdict in bucket:
            if h == g or isomorphism(g, h) is not None:
                return verdict
        return None

    def put(self, g: Graph, verdict: bool) -> None:
        with self._lock:
            self._buckets.setdefault(invariant(g), []).append((g, verdict))


_perfect_memo = _IsoMemo()


def _delete(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.all_mask & ~(1 << v))


def _oracle_perfect(g: Graph) -> bool:
    if g.n <= 3:
        # every graph on at most 3 vertices has b = chi
        return True
    cached = _perfect_memo.get(g)
    if cached is not None:
        return cached
    verdict = all(_oracle_perfect(_delete(g, v)) for v in range(g.n))
    if verdict:
        verdict = b_chromatic_number(g) == chromatic_number(g)
    _perfect_memo.put(g, verdict)
    return verdict


def is_b_perfect_oracle(g: Graph) -> bool:
    """True iff b(H) = chi(H) for every induced subgraph H (exhaustive)."""
    if g.n > ORACLE_MAX_N:
        raise TooLarge(f"b-perfection oracle limited to n <= {ORACLE_MAX_N}")
    return _oracle_perfect(g)


def is_minimally_b_imperfect(g: Graph) -> bool:
    if g.n > ORACLE_MAX_N:
        raise TooLarge(f"b-perfection oracle limited to n <= {ORACLE_MAX_N}")
    if b_chromatic_number(g) <= chromatic_number(g):
        return False
    return all(_oracle_perfect(_delete(g, v)) for v in range(g.n))
