import pytest

from bperfect.errors import TooLarge
from bperfect.generate import ENUMERATE_MAX_N, enumerate_graphs, graphs_of_order
from bperfect.graph import are_isomorphic, encode_graph6

import brute

# non-isomorphic graphs on n vertices
COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_counts(corpus7):
    by_n = {}
    for g in corpus7:
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert by_n == COUNTS
    assert len(corpus7) == 1252


@pytest.mark.parametrize("n", range(1, 6))
def test_no_duplicates(n):
    gs = graphs_of_order(n)
    for i, g in enumerate(gs):
        for h in gs[i + 1:]:
            assert not brute.isomorphic(g, h)


def test_min_n_filter():
    out = list(enumerate_graphs(4, min_n=4))
    assert len(out) == 11 and all(g.n == 4 for g in out)


def test_encodings_unique(corpus7):
    texts = [encode_graph6(g) for g in corpus7]
    assert len(set(texts)) == len(texts)


def test_cap():
    assert ENUMERATE_MAX_N == 8
    with pytest.raises(TooLarge):
        list(enumerate_graphs(ENUMERATE_MAX_N + 1))
