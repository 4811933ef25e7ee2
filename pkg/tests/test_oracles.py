import pytest
from hypothesis import given, settings

from bperfect.errors import ImproperColoring, SizeMismatch, TooLarge
from bperfect.forbidden import family
from bperfect.generate import random_graph
from bperfect.graph import (Graph, complement, complete, cycle, disjoint_union, empty,
                            induced_subgraph, path)
from bperfect.oracles import (Coloring, b_chromatic_number, b_coloring_witness, b_vertices,
                              chromatic_number, clique_number, is_b_coloring,
                              is_b_perfect_oracle, is_minimally_b_imperfect, is_proper,
                              max_clique, optimal_coloring)

import brute
from conftest import graphs


class TestColoring:
    def test_must_use_every_color(self):
        with pytest.raises(ValueError):
            Coloring((1, 3))

    def test_normalized(self):
        assert Coloring.normalized([5, 2, 5]).colors == (2, 1, 2)

    def test_is_proper(self):
        assert is_proper(complete(2), Coloring((1, 2)))
        assert not is_proper(complete(2), Coloring((1, 1)))
        assert is_proper(cycle(5), Coloring((1, 2, 1, 2, 3)))

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            is_proper(path(3), Coloring((1, 2)))


class TestBVertices:
    def test_triangle(self):
        bv = b_vertices(complete(3), Coloring((1, 2, 3)))
        assert bv == {1: {0}, 2: {1}, 3: {2}}

    def test_p5_two_colors(self):
        bv = b_vertices(path(5), Coloring((1, 2, 1, 2, 1)))
        assert bv[2] == {1, 3}
        assert bv[1] == {0, 2, 4}

    def test_single_color_vacuous(self):
        assert b_vertices(empty(3), Coloring((1, 1, 1))) == {1: {0, 1, 2}}

    def test_improper_raises(self):
        with pytest.raises(ImproperColoring):
            b_vertices(complete(2), Coloring((1, 1)))


class TestIsBColoring:
    def test_c5_three_colors(self):
        assert is_b_coloring(cycle(5), Coloring((1, 2, 1, 2, 3)))

    def test_improper_is_false(self):
        assert not is_b_coloring(complete(2), Coloring((1, 1)))

    def test_p5_no_four_color_b_coloring(self):
        g = path(5)
        assert not any(brute.is_b_assignment(g, c, 4) for c in brute.proper_assignments(g, 4))
        assert b_chromatic_number(g) == 3

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=8))
    def test_optimal_coloring_is_b_coloring(self, g):
        c = optimal_coloring(g)
        assert is_proper(g, c)
        if g.n:
            assert is_b_coloring(g, c)


class TestNumbers:
    def test_chi_examples(self):
        assert chromatic_number(cycle(5)) == 3
        assert chromatic_number(path(5)) == 2
        for n in range(1, 9):
            assert chromatic_number(complete(n)) == n

    def test_omega_examples(self):
        assert clique_number(cycle(5)) == 2
        assert clique_number(complement(cycle(6))) == 3
        k5_minus = Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5)
                                        if (u, v) != (0, 1)])
        assert clique_number(k5_minus) == 4

    def test_b_examples(self):
        for n in range(1, 7):
            assert b_chromatic_number(complete(n)) == n
        assert b_chromatic_number(path(5)) == 3
        assert b_chromatic_number(cycle(5)) == 3

    def test_against_brute_force(self, rng):
        for _ in range(60):
            g = random_graph(rng.randint(0, 6), rng.random(), rng)
            assert chromatic_number(g) == brute.chi(g)
            assert clique_number(g) == brute.omega(g)
            assert b_chromatic_number(g) == brute.b_number(g)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9))
    def test_inequalities(self, g):
        chi = chromatic_number(g)
        b = b_chromatic_number(g)
        assert clique_number(g) <= chi <= b
        assert b <= max(g.degrees(), default=-1) + 1

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=9))
    def test_b_witness_is_b_coloring(self, g):
        c = b_coloring_witness(g)
        if g.n:
            assert is_b_coloring(g, c)
        assert c.k == b_chromatic_number(g)

    def test_max_clique_within(self):
        g = disjoint_union(complete(4), complete(2))
        assert max_clique(g, within=0b110000) == 0b110000

    def test_budget(self):
        with pytest.raises(TooLarge):
            chromatic_number(complement(cycle(11)), budget=5)


class TestBPerfectOracle:
    def test_p4(self):
        assert is_b_perfect_oracle(path(4))

    def test_p5(self):
        assert not is_b_perfect_oracle(path(5))

    def test_two_triangles(self):
        g = disjoint_union(complete(3), complete(3))
        assert is_b_perfect_oracle(g)
        # independent check over every induced subgraph
        for mask in range(1 << g.n):
            h = induced_subgraph(g, mask)
            assert brute.chi(h) == brute.b_number(h)

    def test_too_large(self):
        with pytest.raises(TooLarge):
            is_b_perfect_oracle(path(11))

    def test_matches_subset_definition(self, rng):
        for _ in range(15):
            g = random_graph(rng.randint(3, 6), rng.random(), rng)
            direct = all(brute.chi(induced_subgraph(g, m)) == brute.b_number(induced_subgraph(g, m))
                         for m in range(1 << g.n))
            assert is_b_perfect_oracle(g) == direct


class TestMinimallyBImperfect:
    def test_p5(self):
        assert is_minimally_b_imperfect(path(5))

    def test_p6(self):
        assert not is_minimally_b_imperfect(path(6))
        assert not is_b_perfect_oracle(path(6))

    @pytest.mark.parametrize("idx", range(1, 23))
    def test_family_gate(self, idx):
        assert is_minimally_b_imperfect(family()[idx - 1].graph)
