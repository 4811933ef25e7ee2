import pytest
from hypothesis import given, settings

from bperfect.clique import clique, clique_via_module_tree
from bperfect.errors import NotBPerfect
from bperfect.forbidden import is_b_perfect, small_boats
from bperfect.generate import random_f_free, random_relabel
from bperfect.graph import (Graph, complement, complete, cycle, disjoint_union, empty,
                            induced_subgraph, join, path)
from bperfect.oracles import clique_number

import brute
from conftest import graphs


def _steps(res):
    return [t["step"] for t in res.trace]


class TestExamples:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_complete(self, n):
        assert clique(complete(n)).clique == frozenset(range(n))

    def test_empty_graph(self):
        assert clique(Graph(0)).size == 0
        assert clique(empty(4)).size == 1

    def test_c5_terminal(self):
        res = clique(cycle(5))
        assert res.size == 2 and _steps(res) == [3]

    def test_complement_c6_reaches_step_5(self):
        res = clique(complement(cycle(6)), debug=True)
        assert res.size == 3
        assert _steps(res) == [5]
        assert res.trace[-1]["q"] == 3

    def test_q2_small_boat_is_weakly_chordal(self):
        # the six-vertex boat with non-empty A0, B0 has no hole or antihole
        res = clique(small_boats()[0], debug=True)
        assert res.size == 3 and _steps(res) == [4]

    def test_join_k2_with_two_k1(self):
        res = clique(join(complete(2), empty(2)), debug=True)
        assert res.size == 3

    def test_two_triangles(self):
        g = disjoint_union(complete(3), complete(3))
        res = clique(g, debug=True)
        assert res.size == 3 and g.is_clique(sum(1 << v for v in res.clique))

    def test_p4(self):
        assert clique(path(4), debug=True).size == 2


class TestGuard:
    def test_p5_refused(self):
        with pytest.raises(NotBPerfect) as info:
            clique(path(5))
        assert info.value.index == 1
        with pytest.raises(NotBPerfect):
            clique_via_module_tree(path(5))

    def test_unchecked_still_returns_a_clique(self):
        res = clique(path(5), check=False)
        assert path(5).is_clique(sum(1 << v for v in res.clique))


class TestReductionsPreserveOmega:
    def test_step1_and_step2(self, f_free7):
        for g in f_free7[::5]:
            omega = brute.omega(g)
            res = clique(g, debug=True)
            alive = set(range(g.n))
            for t in res.trace:
                if t["step"] == 1:
                    alive.discard(t["removed"])
                    assert brute.omega(induced_subgraph(g, sorted(alive))) == omega
                elif t["step"] == 2 and "kept" in t:
                    # the set was shrunk to the clique it contributed
                    pass
            assert res.size == omega


def test_both_methods_equal_omega_on_corpus(f_free7):
    for g in f_free7:
        omega = clique_number(g)
        assert clique(g, check=False, debug=True).size == omega
        assert clique_via_module_tree(g, check=False).size == omega


def test_random_f_free(rng):
    for _ in range(40):
        g = random_f_free(rng.randint(6, 10), rng)
        omega = clique_number(g)
        a = clique(g, debug=True)
        b = clique_via_module_tree(g)
        assert a.size == b.size == omega
        for res in (a, b):
            assert g.is_clique(sum(1 << v for v in res.clique))


def test_relabelling_invariance(rng):
    for _ in range(20):
        g = random_f_free(9, rng)
        h = random_relabel(g, rng)
        assert clique(g).size == clique(h).size


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_soundness_on_arbitrary_input(g):
    if not is_b_perfect(g):
        with pytest.raises(NotBPerfect):
            clique(g)
        return
    res = clique(g, debug=True)
    assert g.is_clique(sum(1 << v for v in res.clique))
    assert res.size == clique_number(g)


def test_to_dict():
    d = clique(cycle(5)).to_dict()
    assert d["size"] == 2 and len(d["clique"]) == 2 and d["trace"][0]["case"] == "C5"


def test_random_special_boats_hit_step_5(rng):
    from bperfect.generate import random_special_boat
    hits = 0
    for _ in range(30):
        g, _, _ = random_special_boat(rng, max_q=4, max_part=2)
        res = clique(g, debug=True)
        assert res.size == clique_number(g)
        assert clique_via_module_tree(g).size == res.size
        hits += 5 in _steps(res)
    assert hits > 0
