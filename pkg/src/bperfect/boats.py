"""Boats and special boats.

A boat is a graph whose vertices split into A0..Aq and B0..Bq (q >= 2)
where the A-parts are pairwise complete, the B-parts are pairwise
complete, and the only edges between A and B join Aj to Bj completely for
j >= 1. A1..Aq and B1..Bq are non-empty, and so are A0 and B0 when q = 2.
A special boat additionally has every part a clique.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotABoat, NotSpecial
from .forbidden import (SMALL_BOAT_Q2_PARTS, SMALL_BOAT_Q3_PARTS, find_induced,
                        small_boats)
from .graph import Graph, bits, popcount


@dataclass(frozen=True)
class BoatPartition:
    graph: Graph
    a: tuple[int, ...]  # a[0] is A0, masks
    b: tuple[int, ...]

    @property
    def q(self) -> int:
        return len(self.a) - 1

    @property
    def a_all(self) -> int:
        out = 0
        for m in self.a:
            out |= m
        return out

    @property
    def b_all(self) -> int:
        out = 0
        for m in self.b:
            out |= m
        return out

    @property
    def members(self) -> int:
        return self.a_all | self.b_all

    @property
    def special(self) -> bool:
        return all(self.graph.is_clique(m) for m in self.a + self.b)

    def violations(self) -> list[str]:
        return boat_violations(self.graph, self.a, self.b)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "A": [list(bits(m)) for m in self.a],
            "B": [list(bits(m)) for m in self.b],
            "special": self.special,
        }


def _complete(g: Graph, x: int, y: int) -> bool:
    return all(g.adj[v] & y == y for v in bits(x))


def _anticomplete(g: Graph, x: int, y: int) -> bool:
    return all(not g.adj[v] & y for v in bits(x))


def boat_violations(g: Graph, a, b) -> list[str]:
    """Every boat axiom broken by the parts ``a``/``b``; empty means it is a boat."""
    out = []
    q = len(a) - 1
    if len(b) != len(a):
        return ["A and B have different numbers of parts"]
    if q < 2:
        out.append("q < 2")
    seen = 0
    for m in list(a) + list(b):
        if seen & m:
            out.append("parts overlap")
        seen |= m
    for j in range(1, q + 1):
        if not a[j]:
            out.append(f"A{j} empty")
        if not b[j]:
            out.append(f"B{j} empty")
    if q == 2 and (not a[0] or not b[0]):
        out.append("q = 2 needs non-empty A0 and B0")
    for side, parts in (("A", a), ("B", b)):
        for i in range(q + 1):
            for j in range(i + 1, q + 1):
                if not _complete(g, parts[i], parts[j]):
                    out.append(f"{side}{i} not complete to {side}{j}")
    for i in range(q + 1):
        for j in range(q + 1):
            if i == j and i >= 1:
                if not _complete(g, a[i], b[j]):
                    out.append(f"A{i} not complete to B{j}")
            elif not _anticomplete(g, a[i], b[j]):
                out.append(f"A{i} not anticomplete to B{j}")
    return out


def find_small_boat(g: Graph) -> tuple[int, tuple[int, ...]] | None:
    """``(q, embedding)`` of an induced small boat (q = 2 tried first), or None."""
    for q, pattern in zip((2, 3), small_boats()):
        emb = find_induced(g, pattern)
        if emb is not None:
            return q, emb
    return None


def _seed_partition(g: Graph, q: int, emb) -> tuple[list[int], list[int]]:
    a_parts, b_parts = SMALL_BOAT_Q2_PARTS if q == 2 else SMALL_BOAT_Q3_PARTS
    a = [sum(1 << emb[p] for p in part) for part in a_parts]
    b = [sum(1 << emb[p] for p in part) for part in b_parts]
    return a, b


def _placements(g: Graph, a: list[int], b: list[int], x: int):
    bit = 1 << x
    nx = g.adj[x]
    for mine, other, flip in ((a, b, False), (b, a, True)):
        q = len(mine) - 1
        for j in range(q + 1):
            m = list(mine)
            m[j] |= bit
            yield (other, m) if flip else (m, other)
        # open a new index: x alone on its side, paired with its neighbours in the other side's part 0
        paired = other[0] & nx
        if paired:
            m = list(mine) + [bit]
            o = list(other) + [paired]
            o[0] &= ~paired
            yield (o, m) if flip else (m, o)


def extend_to_special_boat(g: Graph, seed=None) -> BoatPartition:
    """Grow a small boat into a special boat spanning all of ``g``.

    ``seed`` is ``(q, embedding)`` as returned by :func:`find_small_boat`.
    Raises ``NotABoat`` if some vertex cannot be placed, or the result is
    not special; both mean the input violated the preconditions.
    """
    if seed is None:
        seed = find_small_boat(g)
        if seed is None:
            raise NotABoat("graph contains no small boat")
    q, emb = seed
    a, b = _seed_partition(g, q, emb)
    if boat_violations(g, a, b):
        raise NotABoat("seed embedding is not a small boat")
    members = sum(a) + sum(b)
    while members != g.all_mask:
        placed = False
        stuck = []
        for x in bits(g.all_mask & ~members):
            seen = g.adj[x] & members
            if not seen or seen == members:
                continue
            for na, nb in _placements(g, a, b, x):
                if not boat_violations(g, na, nb):
                    a, b = na, nb
                    members |= 1 << x
                    placed = True
                    break
            if placed:
                break
            stuck.append(x)
        if not placed:
            if stuck:
                raise NotABoat(f"vertices {stuck} fit no slot of the current boat")
            raise NotABoat("the boat is a proper homogeneous set; no vertex can extend it")
    part = BoatPartition(g, tuple(a), tuple(b))
    if not part.special:
        raise NotABoat("spanning boat has a part that is not a clique")
    return part


def special_boat_max_clique(p: BoatPartition) -> int:
    """Largest of A, B, A1+B1, ..., Aq+Bq; ties go to the earliest listed."""
    if not p.special:
        raise NotSpecial("some part of the boat is not a clique")
    candidates = [p.a_all, p.b_all] + [p.a[j] | p.b[j] for j in range(1, p.q + 1)]
    best = candidates[0]
    for c in candidates[1:]:
        if popcount(c) > popcount(best):
            best = c
    return best
