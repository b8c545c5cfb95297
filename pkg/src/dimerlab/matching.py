"""Exact perfect-matching machinery.

Two independent counting routes (plain enumeration, frontier DP), weighted
dimer sums as polynomials, and the constructive K4-block decomposition of
the perfect matchings of M(G) for a cubic G.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import CapacityError, ClaimViolation, PreconditionError
from .graph import Graph, components
from .poly import SYMBOLS, UNIT, Polynomial, monomial
from .transforms import K4Block, k4_decomposition, middle_graph

DEFAULT_DP_CAP = 28
CAP_ENV = "DIMERLAB_DP_CAP"

Matching = Tuple[int, ...]


def is_matching(g: Graph, edge_ids: Sequence[int]) -> bool:
    seen = set()
    for eid in edge_ids:
        e = g.edges[eid]
        if e.u in seen or e.v in seen:
            return False
        seen.update((e.u, e.v))
    return True


def is_perfect_matching(g: Graph, edge_ids: Sequence[int]) -> bool:
    return is_matching(g, edge_ids) and 2 * len(edge_ids) == g.n


# -- enumeration oracle ------------------------------------------------------


def enumerate_pm(g: Graph) -> Iterator[Matching]:
    """Yield every perfect matching once, as a sorted tuple of edge ids.

    Branches on the lowest uncovered vertex, trying its incident edges in
    edge-id order. The empty graph yields one empty matching.
    """
    n = g.n
    inc = g.incidence
    edges = g.edges
    covered = [False] * n
    chosen: List[int] = []

    def rec(v):
        while v < n and covered[v]:
            v += 1
        if v == n:
            yield tuple(sorted(chosen))
            return
        covered[v] = True
        for eid in inc[v]:
            w = edges[eid].other(v)
            if not covered[w]:
                covered[w] = True
                chosen.append(eid)
                yield from rec(v + 1)
                chosen.pop()
                covered[w] = False
        covered[v] = False

    yield from rec(0)


# -- frontier DP -------------------------------------------------------------


def bfs_order(g: Graph) -> List[int]:
    """Breadth-first order from vertex 0, restarting at the lowest unvisited vertex."""
    seen = [False] * g.n
    order = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for eid in g.incidence[u]:
                w = g.edges[eid].other(u)
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _dp_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV)
    return int(env) if env else DEFAULT_DP_CAP


def _sweep_plan(g: Graph, order: Sequence[int]):
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    nbr_pos = [[pos[g.edges[e].other(v)] for e in g.incidence[v]] for v in order]
    last = [max(ps, default=-1) for ps in nbr_pos]
    # closing[i]: swept vertices whose last neighbour is swept at step i
    closing = [0] * g.n
    for i, l in enumerate(last):
        if l > i:
            closing[l] |= 1 << i
    return nbr_pos, last, closing


def frontier_width(g: Graph, order: Optional[Sequence[int]] = None) -> int:
    """Largest number of swept vertices that still have an unswept neighbour."""
    order = bfs_order(g) if order is None else list(order)
    _, last, closing = _sweep_plan(g, order)
    live = width = 0
    for i in range(g.n):
        if last[i] > i:
            live |= 1 << i
        width = max(width, bin(live).count("1"))
        live &= ~closing[i]
    return width


def _frontier_dp(g: Graph, one, weight_of, cap: Optional[int]):
    order = bfs_order(g)
    nbr_pos, last, closing = _sweep_plan(g, order)
    limit = _dp_cap(cap)
    width = frontier_width(g, order)
    if width > limit:
        raise CapacityError(
            f"frontier width {width} exceeds cap {limit}", width=width, cap=limit
        )

    states: Dict[int, object] = {0: one}
    for i, v in enumerate(order):
        bit = 1 << i
        nxt: Dict[int, object] = {}
        incident = g.incidence[v]
        for mask, val in states.items():
            if last[i] > i:
                key = mask | bit
                nxt[key] = nxt[key] + val if key in nxt else val
            for eid, p in zip(incident, nbr_pos[i]):
                if p < i and (mask >> p) & 1:
                    key = mask & ~(1 << p)
                    term = val * weight_of(eid)
                    nxt[key] = nxt[key] + term if key in nxt else term
        dead = closing[i]
        states = {k: val for k, val in nxt.items() if not k & dead}
        if not states:
            break
    return states.get(0)


def count_pm(g: Graph, method: str = "enumerate", cap: Optional[int] = None) -> int:
    """Exact number of perfect matchings.

    ``method`` is ``"enumerate"`` or ``"frontier-dp"`` (alias ``"dp"``). The DP
    raises :class:`CapacityError` instead of running when its frontier would
    exceed ``cap`` vertices (default 28, overridable via ``DIMERLAB_DP_CAP``).
    """
    if method == "enumerate":
        return sum(1 for _ in enumerate_pm(g))
    if method in ("frontier-dp", "dp"):
        out = _frontier_dp(g, 1, lambda eid: 1, cap)
        return out or 0
    raise ValueError(f"unknown method {method!r}")


_SYMBOL_MONO = {s: monomial(**{s: 1}) for s in SYMBOLS}
_SYMBOL_MONO[UNIT] = (0,) * len(SYMBOLS)


def weighted_pm_sum(g: Graph, method: str = "enumerate", cap: Optional[int] = None) -> Polynomial:
    """Sum over perfect matchings of the product of edge weight symbols.

    The DP backend only accepts graphs using at most two distinct symbols.
    """
    if method == "enumerate":
        vecs = [_SYMBOL_MONO[e.weight] for e in g.edges]
        counts: Counter = Counter()
        for pm in enumerate_pm(g):
            mono = [0] * len(SYMBOLS)
            for eid in pm:
                for k, d in enumerate(vecs[eid]):
                    mono[k] += d
            counts[tuple(mono)] += 1
        return Polynomial(counts)
    if method in ("frontier-dp", "dp"):
        used = g.weights_used()
        if len(used) > 2:
            raise CapacityError(
                f"DP weighted sums take at most 2 symbols, graph uses {sorted(used)}"
            )
        polys = {s: Polynomial.symbol(s) for s in (UNIT,) + SYMBOLS}
        out = _frontier_dp(g, Polynomial.constant(1), lambda eid: polys[g.edges[eid].weight], cap)
        return out if out is not None else Polynomial.zero()
    raise ValueError(f"unknown method {method!r}")


# -- K4-block structure of PM(M(G)) ------------------------------------------


@dataclass
class StructuredFamily:
    """Perfect matchings of M(G) generated from one perfect matching of L(G).

    ``line_matching`` holds the M(G) ids of the e-e edges forming the L(G)
    matching; ``replaced`` holds the v-e edges that substitute for them, one
    per occupied block; ``free_blocks`` are base vertices whose block holds
    none of the line edges. ``members`` ranges over all 3^|free| ways of
    completing ``replaced`` inside the free blocks.
    """

    index: int
    line_matching: Matching
    replaced: Matching
    free_blocks: Tuple[int, ...]
    members: List[Matching] = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "l": self.index,
            "Ml": list(self.line_matching),
            "Mlprime": list(self.replaced),
            "free_blocks": list(self.free_blocks),
            "family_size": len(self.members),
        }


def _require_even_cubic(g: Graph):
    if not g.is_simple():
        raise PreconditionError("graph has parallel edges")
    if not g.is_cubic():
        raise PreconditionError("graph is not cubic")
    if len(components(g)) != 1:
        raise PreconditionError("graph is disconnected")
    if g.m % 2:
        raise PreconditionError(f"edge count {g.m} is odd")


def line_subgraph(mg: Graph) -> Tuple[Graph, List[int], List[int]]:
    """The e-e part of a middle graph, i.e. L(G) sitting inside M(G).

    Returns the subgraph plus maps from its vertex and edge ids back to M(G).
    """
    evs = [v for v, r in enumerate(mg.roles) if r.kind == "e"]
    local = {v: i for i, v in enumerate(evs)}
    eids, pairs = [], []
    for eid, e in enumerate(mg.edges):
        if e.u in local and e.v in local:
            eids.append(eid)
            pairs.append((local[e.u], local[e.v]))
    return Graph([mg.roles[v] for v in evs], pairs), evs, eids


def structured_pm_families(g: Graph, mg: Optional[Graph] = None) -> List[StructuredFamily]:
    """Partition the perfect matchings of M(g) by the L(g) matching they extend.

    For every perfect matching of L(g), checks that it occupies exactly m/2
    blocks, that the free blocks have their e-vertices covered by three
    distinct outside edges and are pairwise vertex-disjoint, that the
    substituted v-e edges form a matching, and that each completion is a
    perfect matching of M(g). Families are checked to be pairwise disjoint.
    Raises :class:`ClaimViolation` on any failure.
    """
    _require_even_cubic(g)
    n, m = g.n, g.m
    mg = middle_graph(g) if mg is None else mg
    blocks = k4_decomposition(mg)
    block_of_edge = {eid: b for b in blocks for eid in b.edge_ids}
    block_pms = {b.base_vertex: b.matchings(mg) for b in blocks}
    lg, _, l_to_m = line_subgraph(mg)

    families = []
    seen_members = set()
    for idx, lpm in enumerate(enumerate_pm(lg)):
        ml = tuple(sorted(l_to_m[i] for i in lpm))
        if len(ml) != m // 2:
            raise ClaimViolation(f"line matching {idx} has {len(ml)} edges, expected {m // 2}")
        occupied: Dict[int, int] = {}
        for eid in ml:
            b = block_of_edge[eid]
            if b.base_vertex in occupied:
                raise ClaimViolation(f"block {b.base_vertex} holds two line edges")
            occupied[b.base_vertex] = eid
        if len(occupied) != m // 2:
            raise ClaimViolation(f"{len(occupied)} occupied blocks, expected {m // 2}")

        cover = {}
        for eid in ml:
            e = mg.edges[eid]
            cover[e.u] = cover[e.v] = eid
        free = [b for b in blocks if b.base_vertex not in occupied]
        if len(free) != n - m // 2:
            raise ClaimViolation(f"{len(free)} free blocks, expected {n - m // 2}")
        free_vertices = set()
        for b in free:
            outside = [cover.get(ev) for ev in b.e_vertices]
            if None in outside or len(set(outside)) != 3 or any(o in b.edge_ids for o in outside):
                raise ClaimViolation(
                    f"free block {b.base_vertex}: e-vertices not covered by three distinct outside edges"
                )
            verts = {b.v_vertex, *b.e_vertices}
            if verts & free_vertices:
                raise ClaimViolation(f"free block {b.base_vertex} shares a vertex with another")
            free_vertices |= verts

        # Each occupied block trades its e-e edge for the v-e edge to its third e-vertex.
        replaced = []
        for b in blocks:
            if b.base_vertex not in occupied:
                continue
            e = mg.edges[occupied[b.base_vertex]]
            (third,) = set(b.e_vertices) - {e.u, e.v}
            for ve, _ in block_pms[b.base_vertex]:
                if third in (mg.edges[ve].u, mg.edges[ve].v):
                    replaced.append(ve)
        replaced_t = tuple(sorted(replaced))
        if len(replaced_t) != m // 2 or not is_matching(mg, replaced_t):
            raise ClaimViolation(f"substituted edges of family {idx} do not form a matching")

        members = []
        for choice in product(*(block_pms[b.base_vertex] for b in free)):
            pm = tuple(sorted(replaced_t + tuple(eid for pair in choice for eid in pair)))
            if len(pm) != (n + m) // 2 or not is_perfect_matching(mg, pm):
                raise ClaimViolation(f"member of family {idx} is not a perfect matching")
            if pm in seen_members:
                raise ClaimViolation(f"perfect matching {pm} appears in two families")
            seen_members.add(pm)
            members.append(pm)
        families.append(
            StructuredFamily(
                index=idx,
                line_matching=ml,
                replaced=replaced_t,
                free_blocks=tuple(sorted(b.base_vertex for b in free)),
                members=members,
            )
        )
    return families


def line_matching_of(mg: Graph, blocks: Sequence[K4Block], pm: Sequence[int]) -> Matching:
    """Recover the L(G) matching that a perfect matching of M(G) extends.

    Blocks holding exactly one edge of ``pm`` hold a v-e edge; the e-e edge
    opposite to it in the block is the line edge.
    """
    chosen = set(pm)
    out = []
    for b in blocks:
        inside = [eid for eid in b.edge_ids if eid in chosen]
        if len(inside) != 1:
            continue
        for ve, ee in b.matchings(mg):
            if ve == inside[0]:
                out.append(ee)
                break
        else:
            raise ClaimViolation(f"block {b.base_vertex} holds a lone e-e edge")
    return tuple(sorted(out))


@dataclass
class BijectionAudit:
    n: int
    m: int
    family_count: int
    expected_families: int
    family_sizes: List[int]
    expected_size: int
    union_size: int
    oracle_count: int
    union_is_oracle: bool
    inverse_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.family_count == self.expected_families
            and all(s == self.expected_size for s in self.family_sizes)
            and self.union_size == self.oracle_count
            and self.union_is_oracle
            and self.inverse_ok
        )

    def to_dict(self) -> dict:
        d = {k: v for k, v in self.__dict__.items() if k != "family_sizes"}
        d["distinct_family_sizes"] = sorted(set(self.family_sizes))
        d["ok"] = self.ok
        return d


def audit_bijection(g: Graph) -> BijectionAudit:
    """Check the families against an independent enumeration of PM(M(g))."""
    _require_even_cubic(g)
    mg = middle_graph(g)
    families = structured_pm_families(g, mg)
    union = {pm for fam in families for pm in fam.members}
    oracle = set(enumerate_pm(mg))
    blocks = k4_decomposition(mg)
    by_line = {fam.line_matching: set(fam.members) for fam in families}
    inverse_ok = all(pm in by_line.get(line_matching_of(mg, blocks, pm), ()) for pm in oracle)
    return BijectionAudit(
        n=g.n,
        m=g.m,
        family_count=len(families),
        expected_families=2 ** (g.m - g.n + 1),
        family_sizes=[len(f.members) for f in families],
        expected_size=3 ** (g.n // 4),
        union_size=len(union),
        oracle_count=len(oracle),
        union_is_oracle=union == oracle,
        inverse_ok=inverse_ok,
    )
