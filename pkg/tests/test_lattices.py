import pytest

from dimerlab import (
    LatticeSpec,
    PreconditionError,
    bridges,
    components,
    count_pm,
    enumerate_pm,
    honeycomb_torus,
    kagome_torus,
    named_cubic,
    random_cubic,
    silicate_torus,
)
from dimerlab.lattices import RetryBudgetExceeded, random_subcubic
from dimerlab.transforms import k4_decomposition


def has_triangle(g):
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    return any(adj[u] & adj[v] for e in g.edges for u, v in [(e.u, e.v)])


def is_bipartite_by_side(g):
    return all((e.u % 2) != (e.v % 2) for e in g.edges)


class TestHoneycomb:
    @pytest.mark.parametrize("rows, cols", [(2, 2), (2, 3), (3, 4)])
    def test_structure(self, rows, cols):
        h = honeycomb_torus(rows, cols)
        assert (h.n, h.m) == (2 * rows * cols, 3 * rows * cols)
        assert h.is_cubic() and h.is_simple() and h.is_connected()
        assert is_bipartite_by_side(h)
        for d in "xyz":
            cls = [e for e in h.edges if e.weight == d]
            assert len(cls) == rows * cols
            # each direction class is a perfect matching
            assert len({v for e in cls for v in (e.u, e.v)}) == h.n

    def test_too_small(self):
        with pytest.raises(PreconditionError):
            honeycomb_torus(1, 2)

    def test_unweighted(self):
        assert honeycomb_torus(2, 2, weighted=False).weights_used() == set()


class TestKagome:
    def test_structure(self):
        k = kagome_torus(2, 2)
        assert k.n == 12 and all(d == 4 for d in k.degrees())
        assert k.weights_used() == {"a", "b", "c"}

    def test_weights_by_direction_pair(self):
        k = kagome_torus(2, 3)
        h = honeycomb_torus(2, 3)
        table = {frozenset("yz"): "a", frozenset("xz"): "b", frozenset("xy"): "c"}
        for e in k.edges:
            pair = frozenset((h.edges[e.u].weight, h.edges[e.v].weight))
            assert e.weight == table[pair]

    @pytest.mark.parametrize("rows, cols", [(2, 2), (2, 3)])
    def test_every_covering_is_weight_balanced(self, rows, cols):
        k = kagome_torus(rows, cols)
        half = rows * cols // 2
        seen = 0
        for pm in enumerate_pm(k):
            ws = [k.edges[eid].weight for eid in pm]
            assert ws.count("a") == ws.count("b") == ws.count("c") == half
            seen += 1
        assert seen == 2 ** (rows * cols + 1)


class TestSilicate:
    def test_structure(self):
        s = silicate_torus(2, 2)
        assert (s.n, s.m) == (20, 48)
        blocks = k4_decomposition(s)
        assert len(blocks) == 8

    def test_blocks_are_weighted_k4(self):
        s = silicate_torus(2, 3)
        for b in k4_decomposition(s):
            pairs = set()
            for ve, ee in b.matchings(s):
                pairs.add((s.edges[ve].weight, s.edges[ee].weight))
            assert pairs == {("x", "a"), ("y", "b"), ("z", "c")}

    def test_unweighted_count(self):
        assert count_pm(silicate_torus(2, 2, weighted=False)) == 288


def test_lattice_spec():
    g = LatticeSpec("silicate", 2, 2, weighted=True).build()
    assert g.n == 20 and g.weights_used() == set("abcxyz")
    with pytest.raises(PreconditionError):
        LatticeSpec("square", 2, 2).build()


class TestNamed:
    @pytest.mark.parametrize("name, n, m", [
        ("K4", 4, 6), ("K33", 6, 9), ("prism", 6, 9), ("cube", 8, 12),
        ("petersen", 10, 15), ("bridged10", 10, 15), ("bridged14", 14, 21),
    ])
    def test_cubic_sizes(self, name, n, m):
        g = named_cubic(name)
        assert (g.n, g.m) == (n, m)
        assert g.is_cubic() and g.is_simple() and g.is_connected()

    def test_bridged10(self):
        assert len(bridges(named_cubic("bridged10"))) == 1

    def test_bridged14_sides(self):
        g = named_cubic("bridged14")
        (e,) = bridges(g)
        rest = g.delete_edges([e])
        for comp in components(rest):
            assert sum(1 for ed in rest.edges if ed.u in comp) == 10

    def test_unknown(self):
        with pytest.raises(PreconditionError):
            named_cubic("heawood")


class TestRandomCubic:
    @pytest.mark.parametrize("seed", range(5))
    def test_n4_is_k4(self, seed):
        g = random_cubic(4, seed)
        assert g.m == 6 and g.is_cubic()

    @pytest.mark.parametrize("seed", range(10))
    def test_n6_is_k33_or_prism(self, seed):
        g = random_cubic(6, seed)
        assert g.is_cubic() and g.is_simple() and g.is_connected()
        # prism has triangles, K33 is triangle-free; both have 9 edges
        assert g.m == 9

    def test_both_six_vertex_graphs_appear(self):
        kinds = {has_triangle(random_cubic(6, s)) for s in range(40)}
        assert kinds == {True, False}

    def test_odd_rejected(self):
        with pytest.raises(PreconditionError):
            random_cubic(5, 0)

    def test_deterministic(self):
        assert random_cubic(12, 7) == random_cubic(12, 7)
        assert random_cubic(12, 7).to_json() == random_cubic(12, 7).to_json()

    def test_budget(self):
        # K2 is the only connected graph on two vertices, so even m never occurs
        with pytest.raises(RetryBudgetExceeded):
            random_subcubic(2, 0, even_edges=True, max_tries=5)


def test_subcubic_degree_cap():
    for seed in range(30):
        g = random_subcubic(11, seed, extra=3.0)
        assert g.max_degree() <= 3 and g.is_connected() and g.is_simple()
