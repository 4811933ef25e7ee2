"""
Checking the characterization on all small graphs
=================================================

Enumerate every graph up to 6 vertices and compare the fast test with the
exact oracle, b-greedy with chi and the clique routine with omega.
"""
import time
from collections import Counter

from bperfect import b_greedy, clique, is_b_perfect, is_b_perfect_oracle
from bperfect.generate import enumerate_graphs
from bperfect.oracles import chromatic_number, clique_number

t0 = time.perf_counter()
count = Counter()
for g in enumerate_graphs(6):
    fast = is_b_perfect(g)
    count["graphs"] += 1
    count["b-perfect"] += fast
    if fast != is_b_perfect_oracle(g):
        count["recognition mismatch"] += 1
    if fast:
        if b_greedy(g)[0].k != chromatic_number(g):
            count["coloring mismatch"] += 1
        if clique(g, check=False).size != clique_number(g):
            count["clique mismatch"] += 1
print(dict(count), f"{time.perf_counter() - t0:.1f}s")

# same thing from the shell, on n <= 7:
#   bperfect enumerate --max-n 7 | bperfect verify --jobs 4
