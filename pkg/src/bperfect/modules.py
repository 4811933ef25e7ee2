"""Homogeneous sets, comparable vertices and the modular decomposition tree.

The tree is built top-down with the naive closure method: the smallest
module containing two vertices is obtained by repeatedly absorbing
splitters. This is cubic-ish rather than linear, which is plenty at the
sizes this package targets.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, bits, co_component_masks, component_masks, popcount

LEAF, PARALLEL, SERIES, PRIME = "leaf", "parallel", "series", "prime"


@dataclass
class ModuleNode:
    members: int
    kind: str
    children: list["ModuleNode"] = field(default_factory=list)

    @property
    def vertices(self) -> list[int]:
        return list(bits(self.members))

    def walk(self):
        yield self
        for ch in self.children:
            yield from ch.walk()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "members": self.vertices,
            "children": [c.to_dict() for c in self.children],
        }


def is_homogeneous(g: Graph, s: int) -> bool:
    """Every vertex outside ``s`` sees all of ``s`` or none of it."""
    outside = g.all_mask & ~s
    for v in bits(outside):
        seen = g.adj[v] & s
        if seen and seen != s:
            return False
    return True


def splitters(g: Graph, s: int, scope: int) -> int:
    out = 0
    for v in bits(scope & ~s):
        seen = g.adj[v] & s
        if seen and seen != s:
            out |= 1 << v
    return out


def module_closure(g: Graph, s: int, scope: int | None = None) -> int:
    """Smallest module of ``g[scope]`` containing ``s``."""
    scope = g.all_mask if scope is None else scope
    while True:
        sp = splitters(g, s, scope)
        if not sp:
            return s
        s |= sp


def _maximal_proper_modules(g: Graph, scope: int) -> list[int]:
    # only called when g[scope] and its complement are both connected; the
    # maximal proper modules then partition scope
    parts = []
    left = scope
    while left:
        v = (left & -left).bit_length() - 1
        block = 1 << v
        for u in bits(scope & ~(1 << v)):
            m = module_closure(g, (1 << v) | (1 << u), scope)
            if m != scope:
                block |= m
        parts.append(block)
        left &= ~block
    return parts


def _build(g: Graph, scope: int) -> ModuleNode:
    if popcount(scope) == 1:
        return ModuleNode(scope, LEAF)
    comps = component_masks(g, scope)
    if len(comps) > 1:
        return ModuleNode(scope, PARALLEL, [_build(g, c) for c in comps])
    cocomps = co_component_masks(g, scope)
    if len(cocomps) > 1:
        return ModuleNode(scope, SERIES, [_build(g, c) for c in cocomps])
    parts = _maximal_proper_modules(g, scope)
    parts.sort(key=lambda m: m & -m)
    return ModuleNode(scope, PRIME, [_build(g, p) for p in parts])


def modular_decomposition(g: Graph) -> ModuleNode | None:
    """Modular decomposition tree of ``g``; None for the empty graph."""
    if g.n == 0:
        return None
    return _build(g, g.all_mask)


def find_proper_homogeneous_nonclique(g: Graph, tree: ModuleNode | None = None) -> int | None:
    """A homogeneous set other than V(G), with >= 2 vertices, that is not a clique."""
    if g.n < 3:
        return None
    tree = modular_decomposition(g) if tree is None else tree
    for child in tree.children:
        if not g.is_clique(child.members):
            return child.members
    # every proper module is a union of root children (degenerate root) or
    # lies inside one child; unions of >= 2 parallel children are non-cliques
    if tree.kind == PARALLEL and len(tree.children) >= 3:
        out = 0
        for child in tree.children[:-1]:
            out |= child.members
        return out
    return None


def dominates(g: Graph, x: int, y: int) -> bool:
    """N(y) is contained in N(x) + {x}."""
    return not (g.adj[y] & ~g.adj[x] & ~(1 << x))


def find_comparable_nonadjacent(g: Graph) -> tuple[int, int] | None:
    """Lexicographically smallest non-adjacent ``(x, y)`` with x dominating y."""
    for x in range(g.n):
        for y in range(g.n):
            if x != y and not g.has_edge(x, y) and dominates(g, x, y):
                return x, y
    return None
