"""Toroidal honeycomb / Kagome / silicate lattices, named cubic graphs, random corpora."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import DimerlabError, PreconditionError
from .graph import Graph, components
from .poly import UNIT
from .transforms import line_graph, middle_graph

DIRECTIONS = ("x", "y", "z")
# An e-e edge joining two honeycomb directions carries the symbol paired with
# the third direction, so each K4 block has matchings {a x, b y, c z}.
COMPLEMENT = {
    frozenset("yz"): "a",
    frozenset("xz"): "b",
    frozenset("xy"): "c",
}


def _check_size(rows, cols):
    if rows < 2 or cols < 2:
        raise PreconditionError(f"torus {rows}x{cols} is too small; need rows, cols >= 2")


def honeycomb_torus(rows: int, cols: int, weighted: bool = True) -> Graph:
    """Hexagonal lattice on a rows x cols torus: 2*rows*cols vertices, cubic, bipartite.

    Vertex ``2*(i*cols + j) + side`` is u[i,j] (side 0) or w[i,j] (side 1).
    Edges u[i,j]-w[i,j] are x, w[i,j]-u[i,j+1] are y, w[i,j]-u[i+1,j] are z.
    """
    _check_size(rows, cols)

    def u(i, j):
        return 2 * ((i % rows) * cols + (j % cols))

    edges = []
    for i in range(rows):
        for j in range(cols):
            w = u(i, j) + 1
            edges.append((u(i, j), w, "x" if weighted else UNIT))
            edges.append((w, u(i, j + 1), "y" if weighted else UNIT))
            edges.append((w, u(i + 1, j), "z" if weighted else UNIT))
    return Graph(2 * rows * cols, edges)


def edge_direction(edge_id: int) -> str:
    """Direction class of a honeycomb edge id (edges come in x, y, z triples)."""
    return DIRECTIONS[edge_id % 3]


def _line_rule(g, i, j):
    return COMPLEMENT[frozenset((edge_direction(i), edge_direction(j)))]


def kagome_torus(rows: int, cols: int, weighted: bool = True) -> Graph:
    """Line graph of the honeycomb torus; weights a, b, c by direction pair."""
    h = honeycomb_torus(rows, cols)
    return line_graph(h, _line_rule if weighted else None)


def silicate_torus(rows: int, cols: int, weighted: bool = True) -> Graph:
    """Middle graph of the honeycomb torus.

    A v-e edge takes the direction symbol of its honeycomb edge; an e-e edge
    takes a, b or c as in the Kagome lattice.
    """
    h = honeycomb_torus(rows, cols)
    if not weighted:
        return middle_graph(h)
    return middle_graph(
        h,
        weight_rule=_line_rule,
        incidence_rule=lambda g, v, i: edge_direction(i),
    )


@dataclass(frozen=True)
class LatticeSpec:
    family: str
    rows: int
    cols: int
    weighted: bool = False

    def build(self) -> Graph:
        try:
            gen = {"honeycomb": honeycomb_torus, "kagome": kagome_torus, "silicate": silicate_torus}[
                self.family
            ]
        except KeyError:
            raise PreconditionError(f"unknown lattice family {self.family!r}") from None
        return gen(self.rows, self.cols, weighted=self.weighted)


# -- named cubic graphs ------------------------------------------------------


def _k4_subdivided():
    # K4 on 0..3 with edge 0-1 subdivided by vertex 4
    return [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)]


def _k33_subdivided():
    # K_{3,3} on {0,1,2}|{3,4,5} with edge 0-3 subdivided by vertex 6
    pairs = [(a, b) for a in range(3) for b in range(3, 6) if (a, b) != (0, 3)]
    return pairs + [(0, 6), (6, 3)]


def _bridged(side, k):
    # two copies joined between their degree-2 vertices (index k-1 in each copy)
    pairs = list(side) + [(a + k, b + k) for a, b in side]
    pairs.append((k - 1, 2 * k - 1))
    return Graph(2 * k, pairs)


def named_cubic(name: str) -> Graph:
    key = name.lower()
    if key == "k4":
        return Graph(4, list(combinations(range(4), 2)))
    if key == "k33":
        return Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    if key == "prism":
        return Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    if key == "cube":
        return Graph(8, [(a, a ^ (1 << k)) for a in range(8) for k in range(3) if a < a ^ (1 << k)])
    if key == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph(10, outer + spokes + inner)
    if key == "bridged10":
        return _bridged(_k4_subdivided(), 5)
    if key == "bridged14":
        return _bridged(_k33_subdivided(), 7)
    raise PreconditionError(f"unknown named graph {name!r}")


NAMED = ("K4", "K33", "prism", "cube", "petersen", "bridged10", "bridged14")


# -- random corpora ----------------------------------------------------------


class RetryBudgetExceeded(DimerlabError, RuntimeError):
    pass


def random_cubic(n: int, seed: int, max_tries: int = 10_000) -> Graph:
    """Simple connected cubic graph from the configuration model.

    The 3n half-edges are paired by a seeded permutation; any draw with a
    loop, a repeated pair or more than one component is rejected.
    """
    if n % 2 or n < 4:
        raise PreconditionError(f"no simple cubic graph on {n} vertices")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), 3)
    for _ in range(max_tries):
        perm = rng.permutation(stubs).reshape(-1, 2)
        pairs = set()
        ok = True
        for a, b in perm.tolist():
            key = (min(a, b), max(a, b))
            if a == b or key in pairs:
                ok = False
                break
            pairs.add(key)
        if not ok:
            continue
        g = Graph(n, sorted(pairs))
        if len(components(g)) == 1:
            return g
    raise RetryBudgetExceeded(f"no simple connected cubic graph on {n} vertices in {max_tries} draws")


def random_subcubic(n: int, seed: int, extra: float = 0.5, even_edges: bool | None = None,
                    max_tries: int = 10_000) -> Graph:
    """Connected simple graph with maximum degree <= 3.

    A random tree under the degree cap, then roughly ``extra * n`` random
    chords that keep every degree at most 3. ``even_edges`` forces the
    parity of the edge count when given.
    """
    if n < 1:
        raise PreconditionError("need at least one vertex")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        deg = [0] * n
        pairs = set()
        order = rng.permutation(n).tolist()
        for k in range(1, n):
            hosts = [v for v in order[:k] if deg[v] < 3]
            host = hosts[int(rng.integers(len(hosts)))]
            v = order[k]
            pairs.add((min(host, v), max(host, v)))
            deg[host] += 1
            deg[v] += 1
        for _ in range(int(rng.integers(0, int(extra * n) + 2))):
            a, b = (int(t) for t in rng.integers(0, n, size=2))
            key = (min(a, b), max(a, b))
            if a != b and key not in pairs and deg[a] < 3 and deg[b] < 3:
                pairs.add(key)
                deg[a] += 1
                deg[b] += 1
        if even_edges is not None and (len(pairs) % 2 == 0) != even_edges:
            continue
        return Graph(n, sorted(pairs))
    raise RetryBudgetExceeded(f"no subcubic graph with requested parity on {n} vertices")
