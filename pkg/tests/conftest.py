"""Brute-force oracles kept independent of the package's own counting code."""

from itertools import combinations

import pytest

from dimerlab import Graph


def brute_pm_count(g: Graph) -> int:
    """Count perfect matchings by testing every (n/2)-subset of edges."""
    if g.n % 2:
        return 0
    total = 0
    for subset in combinations(range(g.m), g.n // 2):
        ends = set()
        for eid in subset:
            e = g.edges[eid]
            ends.add(e.u)
            ends.add(e.v)
        if len(ends) == g.n:
            total += 1
    return total


def brute_component_count(n, pairs):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in pairs:
        parent[find(a)] = find(b)
    return len({find(v) for v in range(n)})


def brute_bridges(g: Graph) -> set:
    pairs = [(e.u, e.v) for e in g.edges]
    base = brute_component_count(g.n, pairs)
    return {
        i for i in range(g.m)
        if brute_component_count(g.n, pairs[:i] + pairs[i + 1:]) > base
    }


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n == 2:
        return Graph(2, [(0, 1), (0, 1)], multigraph=True)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def oracle():
    return brute_pm_count


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
