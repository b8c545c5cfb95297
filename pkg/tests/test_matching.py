import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimerlab import (
    CapacityError,
    Graph,
    PreconditionError,
    audit_bijection,
    count_pm,
    enumerate_pm,
    middle_graph,
    named_cubic,
    structured_pm_families,
    weighted_pm_sum,
)
from dimerlab.graph import Role
from dimerlab.lattices import random_cubic, random_subcubic
from dimerlab.matching import frontier_width, is_matching, line_matching_of
from dimerlab.poly import Polynomial
from dimerlab.transforms import k4_decomposition

from conftest import brute_pm_count, cycle, path


def weighted_k4():
    # v = 0; e-vertices 1, 2, 3 sit on honeycomb edges of direction x, y, z
    roles = [Role("v", 0), Role("e", 0), Role("e", 1), Role("e", 2)]
    return Graph(roles, [(0, 1, "x"), (0, 2, "y"), (0, 3, "z"),
                         (2, 3, "a"), (1, 3, "b"), (1, 2, "c")])


class TestEnumerate:
    def test_c4(self):
        assert len(list(enumerate_pm(cycle(4)))) == 2

    def test_k4(self):
        pms = list(enumerate_pm(named_cubic("K4")))
        assert len(pms) == 3
        assert len(set(pms)) == 3

    def test_odd_order(self):
        assert list(enumerate_pm(path(5))) == []

    def test_empty_graph(self):
        assert list(enumerate_pm(Graph(0))) == [()]

    def test_deterministic_order(self):
        # vertex 0 branches on edges 0 then 1 of the 4-cycle
        assert list(enumerate_pm(cycle(4))) == [(0, 2), (1, 3)]

    def test_members_are_perfect(self):
        g = named_cubic("petersen")
        for pm in enumerate_pm(g):
            assert is_matching(g, pm) and 2 * len(pm) == g.n


class TestCount:
    def test_petersen(self):
        g = named_cubic("petersen")
        assert brute_pm_count(g) == 6
        assert count_pm(g) == count_pm(g, "frontier-dp") == 6

    def test_middle_k4(self):
        mg = middle_graph(named_cubic("K4"))
        # n=4, m=6: 2^(6-4+1) * 3^((8-6)/2)
        assert count_pm(mg) == count_pm(mg, "dp") == 2**3 * 3**1

    def test_empty(self):
        assert count_pm(Graph(0)) == count_pm(Graph(0), "dp") == 1

    def test_isolated_vertex(self):
        g = Graph(3, [(0, 1)])
        assert count_pm(g, "dp") == 0
        assert count_pm(Graph(4, [(0, 1)]), "dp") == 0

    def test_multigraph_counts_each_parallel_edge(self):
        assert count_pm(cycle(2)) == count_pm(cycle(2), "dp") == 2

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            count_pm(cycle(4), "magic")

    def test_capacity_error(self):
        g = middle_graph(named_cubic("cube"))
        w = frontier_width(g)
        with pytest.raises(CapacityError) as info:
            count_pm(g, "dp", cap=w - 1)
        assert info.value.width == w
        assert count_pm(g, "dp", cap=w) == 288

    def test_capacity_from_environment(self, monkeypatch):
        monkeypatch.setenv("DIMERLAB_DP_CAP", "2")
        with pytest.raises(CapacityError):
            count_pm(named_cubic("petersen"), "dp")


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 14), st.integers(0, 10_000), st.sampled_from([0.0, 0.5, 1.5, 3.0]))
def test_enumeration_and_dp_agree(n, seed, extra):
    g = random_subcubic(n, seed, extra=extra) if n else Graph(0)
    enum = count_pm(g)
    assert enum == count_pm(g, "frontier-dp")
    if g.n % 2:
        assert enum == 0


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 10), st.integers(0, 10_000))
def test_enumeration_matches_subset_oracle(n, seed):
    g = random_subcubic(n, seed, extra=1.0)
    assert count_pm(g) == brute_pm_count(g)


class TestWeighted:
    def test_k4_block(self):
        sym = Polynomial.symbol
        expected = sym("a") * sym("x") + sym("b") * sym("y") + sym("c") * sym("z")
        assert weighted_pm_sum(weighted_k4()) == expected

    def test_single_edge(self):
        assert weighted_pm_sum(Graph(2, [(0, 1, "x")])) == Polynomial.symbol("x")

    def test_unit_c4(self):
        assert weighted_pm_sum(cycle(4)) == Polynomial.constant(2)

    def test_odd_is_zero(self):
        assert weighted_pm_sum(path(3)).is_zero()
        assert weighted_pm_sum(path(3), "dp").is_zero()

    def test_dp_two_symbols(self):
        g = Graph(4, [(0, 1, "x"), (1, 2, "y"), (2, 3, "x"), (3, 0, "y")])
        want = Polynomial.symbol("x") ** 2 + Polynomial.symbol("y") ** 2
        assert weighted_pm_sum(g) == weighted_pm_sum(g, "dp") == want

    def test_dp_refuses_three_symbols(self):
        with pytest.raises(CapacityError):
            weighted_pm_sum(weighted_k4(), "dp")

    def test_eval_at_one_is_count(self):
        from dimerlab import silicate_torus

        g = silicate_torus(2, 2)
        assert weighted_pm_sum(g).evaluate() == count_pm(g)


class TestStructuredFamilies:
    def test_k4(self):
        fams = structured_pm_families(named_cubic("K4"))
        assert len(fams) == 8
        assert all(len(f.members) == 3 for f in fams)
        assert sum(len(f.members) for f in fams) == 24

    def test_cube(self):
        fams = structured_pm_families(named_cubic("cube"))
        assert len(fams) == 32
        assert {len(f.members) for f in fams} == {9}

    def test_family_fields(self):
        g = named_cubic("cube")
        for f in structured_pm_families(g):
            assert len(f.line_matching) == len(f.replaced) == g.m // 2
            assert len(f.free_blocks) == g.n - g.m // 2
            for pm in f.members:
                assert len(pm) == (g.n + g.m) // 2

    def test_to_dict(self):
        f = structured_pm_families(named_cubic("cube"))[0]
        d = f.to_dict()
        assert set(d) == {"l", "Ml", "Mlprime", "free_blocks", "family_size"}
        assert d["l"] == 0 and d["family_size"] == 9

    @pytest.mark.parametrize("g", [cycle(3), named_cubic("petersen"), cycle(2)])
    def test_rejected_inputs(self, g):
        with pytest.raises(PreconditionError):
            structured_pm_families(g)

    def test_inverse_map(self):
        g = named_cubic("K4")
        mg = middle_graph(g)
        blocks = k4_decomposition(mg)
        for f in structured_pm_families(g, mg):
            for pm in f.members:
                assert line_matching_of(mg, blocks, pm) == f.line_matching

    @pytest.mark.parametrize("n, seed", [(4, 0), (8, 1), (8, 2), (12, 3)])
    def test_audit(self, n, seed):
        g = random_cubic(n, seed)
        a = audit_bijection(g)
        assert a.ok, a.to_dict()
        assert a.family_count == 2 ** (g.m - g.n + 1)
        assert a.oracle_count == 2 ** (n // 2 + 1) * 3 ** (n // 4)
