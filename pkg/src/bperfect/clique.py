"""Maximum cliques of b-perfect graphs.

``clique`` is the recursive five-step procedure: drop a dominated
non-neighbour, shrink a non-clique homogeneous set to one of its maximum
cliques, and otherwise finish on a C5, a weakly chordal graph, or a
special boat. ``clique_via_module_tree`` runs the same reductions bottom-up
over the modular decomposition tree.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .boats import extend_to_special_boat, find_small_boat, special_boat_max_clique
from .chordality import find_hole_or_antihole, is_c5, weakly_chordal_max_clique
from .errors import NotABoat, NotBPerfect, StructureViolation
from .forbidden import find_forbidden
from .graph import Graph, bits, induced_subgraph, popcount
from .modules import (PARALLEL, PRIME, SERIES, LEAF, ModuleNode,
                      find_comparable_nonadjacent, find_proper_homogeneous_nonclique,
                      modular_decomposition)


@dataclass
class CliqueResult:
    clique: frozenset[int]
    trace: list[dict] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.clique)

    def to_dict(self) -> dict:
        return {"clique": sorted(self.clique), "size": self.size, "trace": self.trace}


def _guard(g: Graph) -> None:
    hit = find_forbidden(g)
    if hit is not None:
        raise NotBPerfect(*hit)


class _Run:
    """One invocation: vertices are always labelled by the original input graph."""

    def __init__(self, host: Graph, debug: bool):
        self.host = host
        self.debug = debug
        self.trace: list[dict] = []

    def sub(self, mask: int) -> tuple[Graph, list[int]]:
        return induced_subgraph(self.host, mask), list(bits(mask))

    def clique(self, mask: int, from_step: int = 1) -> int:
        while True:
            g, labels = self.sub(mask)
            # step 1
            pair = find_comparable_nonadjacent(g)
            if pair is not None and from_step <= 1:
                x, y = labels[pair[0]], labels[pair[1]]
                self.trace.append({"step": 1, "dominator": x, "removed": y})
                mask &= ~(1 << y)
                continue
            if pair is not None and self.debug:
                raise StructureViolation(
                    f"comparable pair {labels[pair[0]]}, {labels[pair[1]]} reappeared after step 2")
            # step 2
            h = find_proper_homogeneous_nonclique(g)
            if h is not None:
                hmask = sum(1 << labels[v] for v in bits(h))
                self.trace.append({"step": 2, "homogeneous_set": sorted(bits(hmask))})
                k = self.clique(hmask)
                self.trace.append({"step": 2, "kept": sorted(bits(k))})
                mask &= ~(hmask & ~k)
                from_step = 2
                continue
            return self.terminal(g, labels)

    def terminal(self, g: Graph, labels: list[int]) -> int:
        def lift(local: int) -> int:
            return sum(1 << labels[v] for v in bits(local))

        # step 3
        if is_c5(g):
            u, v = next(g.edges())
            self.trace.append({"step": 3, "case": "C5"})
            return lift((1 << u) | (1 << v))
        # step 4
        if find_hole_or_antihole(g) is None:
            k = weakly_chordal_max_clique(g)
            self.trace.append({"step": 4, "case": "weakly chordal", "clique": sorted(bits(lift(k)))})
            return lift(k)
        # step 5
        seed = find_small_boat(g)
        if seed is None:
            raise StructureViolation("not weakly chordal, not a C5 and no small boat")
        try:
            part = extend_to_special_boat(g, seed)
        except NotABoat as exc:
            raise StructureViolation(f"boat extension failed: {exc}") from exc
        k = special_boat_max_clique(part)
        self.trace.append({
            "step": 5, "case": "special boat", "q": part.q,
            "A": [sorted(bits(lift(m))) for m in part.a],
            "B": [sorted(bits(lift(m))) for m in part.b],
        })
        return lift(k)


def clique(g: Graph, check: bool = True, debug: bool = False) -> CliqueResult:
    """A maximum clique of the b-perfect graph ``g``.

    ``check`` refuses inputs with an induced F1..F22. ``debug`` turns the
    claim that no comparable pair reappears after a step-2 reduction into
    a hard error instead of skipping step 1.
    """
    if check:
        _guard(g)
    if g.n == 0:
        return CliqueResult(frozenset())
    run = _Run(g, debug)
    k = run.clique(g.all_mask)
    if not g.is_clique(k):
        raise StructureViolation("result is not a clique of the input")
    return CliqueResult(frozenset(bits(k)), run.trace)


def _prime_clique(run: _Run, mask: int) -> int:
    """Resolve the graph induced by the children's cliques at a prime node."""
    while True:
        g, labels = run.sub(mask)
        pair = find_comparable_nonadjacent(g)
        if pair is None:
            break
        y = labels[pair[1]]
        run.trace.append({"step": "prime", "event": "comparable pair removed",
                          "dominator": labels[pair[0]], "removed": y})
        mask &= ~(1 << y)
    if find_proper_homogeneous_nonclique(g) is not None:
        run.trace.append({"step": "prime", "event": "homogeneous non-clique set, full recursion"})
        return run.clique(mask)
    return run.terminal(g, labels)


def clique_via_module_tree(g: Graph, check: bool = True) -> CliqueResult:
    """Bottom-up maximum clique over the modular decomposition tree."""
    if check:
        _guard(g)
    if g.n == 0:
        return CliqueResult(frozenset())
    run = _Run(g, debug=False)
    tree = modular_decomposition(g)

    def solve(node: ModuleNode) -> int:
        if node.kind == LEAF:
            return node.members
        ks = [solve(ch) for ch in node.children]
        if node.kind == PARALLEL:
            best = max(ks, key=popcount)
            run.trace.append({"node": node.kind, "members": node.vertices,
                              "clique": sorted(bits(best))})
            return best
        if node.kind == SERIES:
            union = 0
            for k in ks:
                union |= k
            run.trace.append({"node": node.kind, "members": node.vertices,
                              "clique": sorted(bits(union))})
            return union
        assert node.kind == PRIME
        union = 0
        for k in ks:
            union |= k
        out = _prime_clique(run, union)
        run.trace.append({"node": node.kind, "members": node.vertices,
                          "clique": sorted(bits(out))})
        return out

    k = solve(tree)
    if not g.is_clique(k):
        raise StructureViolation("result is not a clique of the input")
    return CliqueResult(frozenset(bits(k)), run.trace)
