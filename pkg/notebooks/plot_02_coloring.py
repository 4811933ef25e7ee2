"""
Optimal coloring with b-greedy
==============================

Start from any proper coloring and keep deleting a color class without a
b-vertex, spreading its vertices over the colors they are missing. On a
b-perfect graph the end result uses exactly chi colors.
"""
import random

from bperfect import b_greedy, initial_coloring, is_b_perfect
from bperfect.generate import random_f_free
from bperfect.graph import path
from bperfect.oracles import Coloring, chromatic_number

# Start P5 from a 3-coloring. Class 1 = {0, 4} has no b-vertex.
g = path(5)
c, trace = b_greedy(g, start=Coloring((1, 2, 3, 2, 1)))
print("start :", trace.initial.colors)
for step in trace.steps:
    print(f"drop color {step.eliminated}, recolor {step.recolor}")
print("final :", c.colors)

# The greedy start depends on the order; b-greedy repairs bad orders
rng = random.Random(7)
g = random_f_free(10, rng)
assert is_b_perfect(g)
chi = chromatic_number(g)
for _ in range(5):
    order = list(range(g.n))
    rng.shuffle(order)
    start = initial_coloring(g, order)
    c, trace = b_greedy(g, order)
    print(f"greedy {start.k} colors -> {c.k} after {len(trace.steps)} rounds (chi = {chi})")
