"""Acceptance run: one PASS/FAIL line per criterion.

Each criterion is a single test so a failure names exactly one claim.
The lines are printed as the tests run and repeated in the terminal
summary; ``python tests/test_acceptance.py`` runs them without pytest.
"""
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import brute  # noqa: E402
from conftest import all_graphs, f_free_graphs  # noqa: E402

from bperfect.bgreedy import b_greedy  # noqa: E402
from bperfect.boats import extend_to_special_boat  # noqa: E402
from bperfect.chordality import find_two_pair, weakly_chordal_max_clique  # noqa: E402
from bperfect.clique import clique, clique_via_module_tree  # noqa: E402
from bperfect.forbidden import family, find_forbidden, find_induced, is_b_perfect  # noqa: E402
from bperfect.generate import (random_f_free, random_graph, random_special_boat,  # noqa: E402
                               random_weakly_chordal)
from bperfect.graph import (are_isomorphic, bits, complement, decode_graph6,  # noqa: E402
                            encode_graph6, induced_subgraph, path, popcount)
from bperfect.modules import LEAF, PARALLEL, SERIES, modular_decomposition  # noqa: E402
from bperfect.oracles import (b_chromatic_number, chromatic_number,  # noqa: E402
                              clique_number, is_b_coloring, is_b_perfect_oracle,
                              is_proper)

SEED = 20240611
RESULTS: list[str] = []


def report(k: int, failures: list, detail: str):
    line = f"{'PASS' if not failures else 'FAIL'} criterion {k}: {detail}"
    if failures:
        line += f" ({len(failures)} failures, first: {failures[0]})"
    RESULTS.append(line)
    print(line, file=sys.__stdout__, flush=True)
    assert not failures, line


def test_criterion_1_recognition_matches_oracle():
    gs = all_graphs(7)
    bad = [encode_graph6(g) for g in gs if is_b_perfect(g) != is_b_perfect_oracle(g)]
    report(1, bad, f"F-free recognition equals the b-perfection oracle on {len(gs)} graphs n<=7")


def test_criterion_2_family_gate():
    bad = []
    for p in family():
        g = p.graph
        if not b_chromatic_number(g) > chromatic_number(g):
            bad.append(f"{p.name}: b == chi")
        for v in range(g.n):
            h = induced_subgraph(g, [u for u in range(g.n) if u != v])
            if not is_b_perfect_oracle(h):
                bad.append(f"{p.name} - {v} not b-perfect")
    report(2, bad, "all 22 patterns are minimally b-imperfect")


def test_criterion_3_identities():
    fam = family()
    p5 = path(5)
    checks = {
        "F1 ~ P5": are_isomorphic(fam[0].graph, p5),
        "F10 ~ co-P6": are_isomorphic(fam[9].graph, complement(path(6))),
        "b(P5) = 3": brute.b_number(p5) == 3 and b_chromatic_number(p5) == 3,
        "chi(P5) = 2": brute.chi(p5) == 2 and chromatic_number(p5) == 2,
    }
    report(3, [k for k, ok in checks.items() if not ok], ", ".join(checks))


def test_criterion_4_b_greedy_optimal():
    rng = random.Random(SEED)
    gs = f_free_graphs(7)
    bad = []
    for g in gs:
        chi = chromatic_number(g)
        for _ in range(20):
            order = list(range(g.n))
            rng.shuffle(order)
            k = b_greedy(g, order)[0].k
            if k != chi:
                bad.append((encode_graph6(g), order, k, chi))
    report(4, bad, f"b-greedy uses chi colors on {len(gs)} F-free graphs x 20 orders")


def test_criterion_5_b_greedy_valid():
    rng = random.Random(SEED + 5)
    bad = []
    for _ in range(1000):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        order = list(range(g.n))
        rng.shuffle(order)
        c, _ = b_greedy(g, order)
        if not (is_proper(g, c) and is_b_coloring(g, c)):
            bad.append(encode_graph6(g))
    report(5, bad, "b-greedy output is a proper b-coloring on 1000 random graphs n<=10")


def test_criterion_6_clique_optimal():
    rng = random.Random(SEED + 6)
    corpus = list(f_free_graphs(7))
    sample = [random_f_free(rng.randint(1, 10), rng) for _ in range(500)]
    bad = []
    for g in corpus + sample:
        omega = brute.omega(g) if g.n <= 7 else clique_number(g)
        a = clique(g)
        b = clique_via_module_tree(g)
        mask = sum(1 << v for v in a.clique)
        if not g.is_clique(mask) or a.size != omega or b.size != a.size:
            bad.append((encode_graph6(g), a.size, b.size, omega))
    report(6, bad, f"CLIQUE equals omega on {len(corpus)} exhaustive + 500 random F-free graphs,"
                   " both methods agree")


def test_criterion_7_bipartite_and_p4_free():
    bad = []
    nb = nc = 0
    p4 = path(4)
    for g in all_graphs(7):
        oracle = None
        if chromatic_number(g) <= 2:
            nb += 1
            oracle = is_b_perfect_oracle(g)
            if oracle != (find_forbidden(g, {1, 2, 3}) is None):
                bad.append(("bipartite", encode_graph6(g)))
        if find_induced(g, p4) is None:
            nc += 1
            oracle = is_b_perfect_oracle(g) if oracle is None else oracle
            if oracle != (find_forbidden(g, {3, 6}) is None):
                bad.append(("P4-free", encode_graph6(g)))
    report(7, bad, f"{nb} bipartite graphs vs F1-F3, {nc} P4-free graphs vs F3,F6 (n<=7)")


def _tree_ok(g) -> bool:
    for node in modular_decomposition(g).walk():
        if not brute.is_homogeneous(g, node.vertices):
            return False
        if node.kind == LEAF:
            if popcount(node.members) != 1:
                return False
            continue
        sub = induced_subgraph(g, node.members)
        comps, cocomps = brute.components(sub), brute.components(complement(sub))
        sizes = sorted(popcount(c.members) for c in node.children)
        if node.kind == PARALLEL:
            ok = len(comps) > 1 and sizes == sorted(map(len, comps))
        elif node.kind == SERIES:
            ok = len(comps) == 1 and len(cocomps) > 1 and sizes == sorted(map(len, cocomps))
        else:
            ok = len(comps) == 1 and len(cocomps) == 1
        if not ok:
            return False
    return True


def test_criterion_8_structural_soundness():
    rng = random.Random(SEED + 8)
    bad = []
    trees = list(all_graphs(7)) + [random_graph(rng.randint(8, 10), rng.random(), rng)
                                   for _ in range(200)]
    bad += [("module tree", encode_graph6(g)) for g in trees if not _tree_ok(g)]

    pairs = 0
    for _ in range(300):
        g = random_weakly_chordal(rng.randint(2, 10), rng) if rng.random() < 0.5 else \
            random_graph(rng.randint(2, 10), rng.random(), rng)
        pair = find_two_pair(g)
        if pair is None:
            continue
        pairs += 1
        x, y = pair
        if g.has_edge(x, y) or any(len(p) != 3 for p in brute.induced_paths(g, x, y)):
            bad.append(("two-pair", encode_graph6(g), pair))

    boats = 0
    for _ in range(100):
        g, _, _ = random_special_boat(rng)
        part = extend_to_special_boat(g)
        boats += 1
        a = [list(bits(m)) for m in part.a]
        b = [list(bits(m)) for m in part.b]
        covered = sorted(v for p in a + b for v in p) == list(range(g.n))
        if not (covered and brute.boat_ok(g, a, b, special=True)):
            bad.append(("boat", encode_graph6(g)))

    for _ in range(30):
        g = random_weakly_chordal(rng.randint(1, 10), rng)
        k = weakly_chordal_max_clique(g)
        if not g.is_clique(k) or popcount(k) != brute.omega(g):
            bad.append(("weakly chordal clique", encode_graph6(g)))
    report(8, bad, f"{len(trees)} module trees, {pairs} two-pair certificates, {boats} boat"
                   " extensions, 30 weakly chordal cliques")


def test_criterion_9_graph6_roundtrip():
    rng = random.Random(SEED + 9)
    bad = []
    for _ in range(500):
        g = random_graph(rng.randint(0, 10), rng.random(), rng)
        text = encode_graph6(g)
        back = decode_graph6(text)
        if back != g or encode_graph6(back).encode() != text.encode():
            bad.append(text)
    report(9, bad, "graph6 decode(encode(g)) == g on 500 random graphs n<=10")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
