"""
Recognizing b-perfect graphs
============================

A graph is b-perfect when every induced subgraph has b-chromatic number
equal to its chromatic number. Checking that directly is exponential; the
fast test looks for one of 22 small forbidden induced subgraphs.
"""
from bperfect import family, find_forbidden, is_b_perfect, is_b_perfect_oracle
from bperfect.graph import complement, cycle, path
from bperfect.oracles import Coloring, b_chromatic_number, chromatic_number, is_b_coloring

# P5 is the smallest b-imperfect graph. It is bipartite, yet 1 2 3 1 2
# is a b-coloring: vertices 1, 2 and 3 each see both other colors.
p5 = path(5)
print("chi(P5) =", chromatic_number(p5), " b(P5) =", b_chromatic_number(p5))
print("1 2 3 1 2 is a b-coloring:", is_b_coloring(p5, Coloring((1, 2, 3, 1, 2))))

# the recognizer reports which pattern it found, and where
idx, emb = find_forbidden(p5)
print(f"P5 contains F{idx} at vertices {list(emb)}")

# P4 and C5 are fine
for name, g in [("P4", path(4)), ("C5", cycle(5)), ("co-C6", complement(cycle(6)))]:
    print(f"{name:6s} b-perfect: {is_b_perfect(g)}  oracle: {is_b_perfect_oracle(g)}")

# a longer path contains P5, so it fails too
print("P8 ->", find_forbidden(path(8)))

# sizes of the forbidden family
for p in family():
    print(f"{p.name:4s} n={p.order:2d} m={p.graph.m:2d} {' '.join(p.aliases)}")
