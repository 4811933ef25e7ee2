"""
Maximum clique by structure
===========================

The clique routine peels the graph: drop a vertex whose neighborhood is
inside a non-neighbor's, shrink a homogeneous set to its own best clique,
and finish on C5, a weakly chordal graph, or a special boat. The trace
shows which way it went.
"""
import json
import random

from bperfect import clique, clique_via_module_tree
from bperfect.forbidden import small_boats
from bperfect.generate import random_f_free, random_special_boat
from bperfect.graph import complement, cycle
from bperfect.oracles import clique_number

# complement of C6: three disjoint pairs of non-neighbors, a special boat
res = clique(complement(cycle(6)))
print(json.dumps(res.to_dict(), indent=1))

# the other six-vertex boat is weakly chordal and never needs step 5
print([t["case"] for t in clique(small_boats()[0]).trace])

rng = random.Random(3)
g, a, b = random_special_boat(rng, max_q=4, max_part=2)
print("boat with", g.n, "vertices, A parts", a, "B parts", b)
print("omega =", clique_number(g), " clique ->", sorted(clique(g).clique))

# the module-tree variant does the same reductions bottom-up
for _ in range(5):
    g = random_f_free(10, rng)
    r1, r2 = clique(g), clique_via_module_tree(g)
    print(f"n={g.n} m={g.m:2d}  structural {r1.size}  module-tree {r2.size}  omega {clique_number(g)}")
