import itertools
import random

import pytest
from hypothesis import strategies as st

from sombor.graph import Graph
from sombor.oracle import prufer_decode


def random_tree(rng: random.Random, n: int) -> Graph:
    if n == 1:
        return Graph(1, ((),))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


@st.composite
def trees(draw, min_n=1, max_n=14):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    word = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_decode(word, n)


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    """Isomorphism by trying every vertex bijection; only for tiny graphs."""
    if a.n != b.n or a.m != b.m or a.degree_sequence() != b.degree_sequence():
        return False
    target = {frozenset(e) for e in b.edges()}
    for perm in itertools.permutations(range(a.n)):
        if all(frozenset((perm[u], perm[v])) in target for u, v in a.edges()):
            return True
    return False


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, line = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {line}")
