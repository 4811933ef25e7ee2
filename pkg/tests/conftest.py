import random
import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bperfect.forbidden import is_b_perfect  # noqa: E402
from bperfect.generate import enumerate_graphs  # noqa: E402
from bperfect.graph import Graph  # noqa: E402
from hypothesis import strategies as st  # noqa: E402


@lru_cache(maxsize=None)
def all_graphs(max_n=7):
    return tuple(enumerate_graphs(max_n))


@lru_cache(maxsize=None)
def f_free_graphs(max_n=7):
    return tuple(g for g in all_graphs(max_n) if is_b_perfect(g))


@pytest.fixture(scope="session")
def corpus7():
    return all_graphs(7)


@pytest.fixture(scope="session")
def f_free7():
    return f_free_graphs(7)


@pytest.fixture
def rng():
    return random.Random(20240611)


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    flags = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    return Graph.from_edges(n, [p for p, f in zip(pairs, flags) if f])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
