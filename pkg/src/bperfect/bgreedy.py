"""The b-greedy coloring algorithm.

Start from any proper coloring. While some color class has no b-vertex,
recolor each of its vertices with a color missing from its neighbourhood;
the class disappears. The fixpoint is a b-coloring, and on a b-perfect
graph it uses exactly chi(G) colors because b(G) = chi(G).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import BadOrder, HasBVertex, ImproperColoring
from .graph import Graph, bits
from .oracles import Coloring, _b_vertex_masks, is_b_coloring, is_proper


@dataclass(frozen=True)
class EliminationStep:
    eliminated: int
    # vertex -> new color, in the numbering *before* the dead class is removed
    recolor: dict[int, int]
    colors_before: int
    colors_after: int


@dataclass
class EliminationTrace:
    initial: Coloring
    final: Coloring | None = None
    steps: list[EliminationStep] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "initial": list(self.initial.colors),
            "final": list(self.final.colors) if self.final else None,
            "rounds": len(self.steps),
            "steps": [
                {
                    "eliminated": s.eliminated,
                    "recolor": {str(v): c for v, c in sorted(s.recolor.items())},
                    "colors_before": s.colors_before,
                    "colors_after": s.colors_after,
                }
                for s in self.steps
            ],
        }


def default_order(g: Graph) -> list[int]:
    """Descending degree, ties by vertex index."""
    return sorted(g.vertices(), key=lambda v: (-g.degree(v), v))


def _check_order(g: Graph, order: Sequence[int]) -> list[int]:
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise BadOrder("order must be a permutation of the vertices")
    return order


def initial_coloring(g: Graph, order: Sequence[int] | None = None) -> Coloring:
    """Sequential greedy coloring: each vertex takes the smallest color not on a colored neighbour."""
    order = default_order(g) if order is None else _check_order(g, order)
    col = [0] * g.n
    for v in order:
        taken = {col[u] for u in bits(g.adj[v])}
        c = 1
        while c in taken:
            c += 1
        col[v] = c
    return Coloring(tuple(col))


def _eliminate(g: Graph, c: Coloring, dead: int) -> tuple[Coloring, dict[int, int]]:
    col = list(c.colors)
    k = c.k
    recolor = {}
    for v in range(g.n):
        if col[v] != dead:
            continue
        taken = {col[u] for u in bits(g.adj[v])}
        target = next((x for x in range(1, k + 1) if x != dead and x not in taken), None)
        if target is None:
            raise AssertionError(f"vertex {v} of a b-vertex-free class sees every other color")
        col[v] = target
        recolor[v] = target
    new = Coloring(tuple(x - 1 if x > dead else x for x in col))
    return new, recolor


def eliminate_color(g: Graph, c: Coloring, dead: int) -> Coloring:
    """Recolor the whole class ``dead`` (which must have no b-vertex) and renumber to 1..k-1."""
    if not is_proper(g, c):
        raise ImproperColoring("elimination needs a proper coloring")
    if not 1 <= dead <= c.k:
        raise ValueError(f"color {dead} is not in use")
    if _b_vertex_masks(g, c)[dead]:
        raise HasBVertex(f"color {dead} has a b-vertex")
    new, _ = _eliminate(g, c, dead)
    return new


def b_greedy(g: Graph, order: Sequence[int] | None = None,
             start: Coloring | None = None) -> tuple[Coloring, EliminationTrace]:
    """Run b-greedy from the greedy coloring along ``order`` (or from ``start``)."""
    c = start if start is not None else initial_coloring(g, order)
    if not is_proper(g, c):
        raise ImproperColoring("b-greedy needs a proper starting coloring")
    trace = EliminationTrace(initial=c)
    while True:
        masks = _b_vertex_masks(g, c)
        dead = next((col for col in sorted(masks) if not masks[col]), None)
        if dead is None:
            break
        new, recolor = _eliminate(g, c, dead)
        assert is_proper(g, new), "elimination produced an improper coloring"
        assert new.k == c.k - 1
        trace.steps.append(EliminationStep(dead, recolor, c.k, new.k))
        c = new
    trace.final = c
    assert is_b_coloring(g, c)
    return c, trace
