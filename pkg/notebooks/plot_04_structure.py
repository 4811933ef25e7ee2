"""
Modules, two-pairs and boats
============================

The pieces the clique routine relies on, one at a time.
"""
import json

from bperfect.boats import extend_to_special_boat, find_small_boat
from bperfect.chordality import find_hole_or_antihole, find_two_pair, weakly_chordal_max_clique
from bperfect.graph import Graph, bits, complement, cycle, disjoint_union, path
from bperfect.modules import find_comparable_nonadjacent, modular_decomposition

# modular decomposition of two disjoint P3's
tree = modular_decomposition(disjoint_union(path(3), path(3)))
print(json.dumps(tree.to_dict()))

# comparable pair: N(2) is inside N(0) in P3
print("comparable:", find_comparable_nonadjacent(path(3)))

# holes and antiholes
print(find_hole_or_antihole(cycle(6)))
print(find_hole_or_antihole(complement(cycle(7))))

# two-pairs: opposite corners of C4; contraction keeps omega
print("two-pair in C4:", find_two_pair(cycle(4)))
trace = []
g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4), (4, 5)])
k = weakly_chordal_max_clique(g, trace=trace)
print("contractions", trace, "-> clique", list(bits(k)))

# boats: find a six-vertex seed and grow it to a spanning special boat
g = complement(cycle(6))
print("seed", find_small_boat(g))
print(extend_to_special_boat(g).to_dict())
