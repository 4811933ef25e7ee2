"""Immutable simple graphs on vertices 0..n-1, plus text I/O.

Adjacency is stored as one integer bitmask per vertex, so vertex sets are
plain ints throughout the package (bit ``v`` set means ``v`` is a member).
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import MalformedInput, OutOfRange, TooLarge, Unsupported

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 258047
ISOMORPHISM_MAX_N = 12


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph. Instances are immutable and hashable."""

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if adj is None:
            adj = (0,) * n
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError("adjacency length does not match n")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full:
                raise OutOfRange(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if a >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self._adj) // 2

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    def vertices(self) -> range:
        return range(self._n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self._adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self._n):
            for v in bits(self._adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self._adj[v]:
                return False
        return True

    def is_stable(self, mask: int) -> bool:
        return all(not (self._adj[v] & mask) for v in bits(mask))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        return f"Graph(n={self._n}, edges={list(self.edges())})"


# ---------------------------------------------------------------- builders

def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return Graph(n)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def join(*graphs: Graph) -> Graph:
    """Disjoint union plus every edge between different operands."""
    return complement(disjoint_union(*(complement(g) for g in graphs)))


# ---------------------------------------------------------- set operations

def _check_mask(g: Graph, mask: int) -> None:
    if mask < 0 or mask & ~g.all_mask:
        raise OutOfRange("vertex set contains vertices outside the graph")


def induced_subgraph(g: Graph, s) -> Graph:
    """Subgraph induced by ``s`` (bitmask or iterable), relabelled by ascending index."""
    if isinstance(s, int):
        mask = s
    else:
        s = list(s)
        if any(v < 0 or v >= g.n for v in s):
            raise OutOfRange("vertex set contains vertices outside the graph")
        mask = mask_of(s)
    _check_mask(g, mask)
    keep = list(bits(mask))
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        a = 0
        for u in bits(g.adj[v] & mask):
            a |= 1 << index[u]
        adj.append(a)
    return Graph(len(keep), adj)


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph(g.n, [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)])


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as bitmasks, ordered by smallest member."""
    remaining = g.all_mask if within is None else within
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def co_component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Components of the complement of ``g[within]``, ordered by smallest member."""
    remaining = g.all_mask if within is None else within
    scope = remaining
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= scope & ~g.adj[v] & ~(1 << v)
            frontier = reach & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


# ------------------------------------------------------------ isomorphism

def _signature(g: Graph, v: int) -> tuple:
    deg = g.degrees()
    return deg[v], tuple(sorted(deg[u] for u in bits(g.adj[v])))


def isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Return a bijection ``f`` with ``g.has_edge(u, v) == h.has_edge(f[u], f[v])``, or None."""
    if g.n > ISOMORPHISM_MAX_N or h.n > ISOMORPHISM_MAX_N:
        raise TooLarge(f"isomorphism test limited to n <= {ISOMORPHISM_MAX_N}")
    if g.n != h.n or g.m != h.m:
        return None
    n = g.n
    sg = [_signature(g, v) for v in range(n)]
    sh = [_signature(h, v) for v in range(n)]
    if sorted(sg) != sorted(sh):
        return None
    # most constrained first: connected to already-placed vertices, then rare signatures
    counts: dict = {}
    for s in sg:
        counts[s] = counts.get(s, 0) + 1
    order: list[int] = []
    placed = 0
    left = set(range(n))
    while left:
        v = min(left, key=lambda x: (-popcount(g.adj[x] & placed), counts[sg[x]], -sg[x][0], x))
        order.append(v)
        placed |= 1 << v
        left.discard(v)
    candidates = [[w for w in range(n) if sh[w] == sg[v]] for v in range(n)]
    f = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:i]:
                if g.has_edge(u, v) != h.has_edge(f[u], w):
                    ok = False
                    break
            if ok:
                f[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used &= ~(1 << w)
                f[v] = -1
        return False

    return list(f) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return isomorphism(g, h) is not None


def invariant(g: Graph) -> tuple:
    """Cheap isomorphism invariant used to bucket graphs before exact tests."""
    deg = g.degrees()
    local = []
    for v in range(g.n):
        nb = g.adj[v]
        tri = sum(popcount(g.adj[u] & nb) for u in bits(nb)) // 2
        local.append((deg[v], tri, tuple(sorted(deg[u] for u in bits(nb)))))
    return g.n, g.m, tuple(sorted(local))


# ------------------------------------------------------------------- graph6

def _graph6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= GRAPH6_MAX_N:
        return chr(126) + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise Unsupported(f"graph6 encoding supports n <= {GRAPH6_MAX_N}, got {n}")


def encode_graph6(g: Graph) -> str:
    out = [_graph6_size(g.n)]
    acc = 0
    count = 0
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (aj >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise MalformedInput(0, "empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise MalformedInput(pos, f"byte {ord(ch)} outside the printable range 63..126")
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) < 4 or s[1] == "~":
            raise MalformedInput(1, "unsupported or truncated size prefix")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != need:
        raise MalformedInput(pos, f"expected {need} data bytes for n={n}, found {len(body)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedInput(pos + need - 1, "non-zero padding bits")
    return Graph(n, adj)


# ------------------------------------------------------------ text formats

def _parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise MalformedInput(lineno, "expected 'p edge <n> <m>'")
            if n is not None:
                raise MalformedInput(lineno, "duplicate problem line")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise MalformedInput(lineno, "non-integer size in problem line") from None
        elif parts[0] == "e":
            if n is None:
                raise MalformedInput(lineno, "edge line before problem line")
            if len(parts) != 3:
                raise MalformedInput(lineno, "expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise MalformedInput(lineno, "non-integer endpoint") from None
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInput(lineno, f"endpoint outside 1..{n}")
            if u == v:
                raise MalformedInput(lineno, "self-loop")
            edges.append((u, v))
        else:
            raise MalformedInput(lineno, f"unknown line type {parts[0]!r}")
    if n is None:
        raise MalformedInput(0, "missing problem line")
    return Graph.from_edges(n, edges)


def _parse_edgelist(text: str, n: int | None) -> Graph:
    edges = []
    declared = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and declared is None and not edges:
            if len(parts) != 2 or not parts[1].isdigit():
                raise MalformedInput(lineno, "expected 'n <count>'")
            declared = int(parts[1])
            continue
        if len(parts) != 2:
            raise MalformedInput(lineno, "expected two endpoints")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedInput(lineno, "non-integer endpoint") from None
        if u < 0 or v < 0:
            raise MalformedInput(lineno, "negative vertex index")
        if u == v:
            raise MalformedInput(lineno, "self-loop")
        edges.append((u, v))
    if n is None:
        n = declared
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    for u, v in edges:
        if u >= n or v >= n:
            raise MalformedInput(0, f"edge ({u}, {v}) outside 0..{n - 1}")
    return Graph.from_edges(n, edges)


def parse_graph(text: str, format: str = "graph6", n: int | None = None) -> Graph:
    """Parse ``text`` as ``graph6``, ``dimacs`` or ``edgelist``.

    ``n`` only applies to edge lists and overrides any ``n <count>`` line.
    """
    if format == "graph6":
        return decode_graph6(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    if format == "edgelist":
        return _parse_edgelist(text, n)
    raise ValueError(f"unknown format {format!r}")


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def format_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
