"""Line graph, vertex-edge (middle) graph, and the reductions that preserve p(M(.))."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

from .errors import PreconditionError
from .graph import Graph, Role, components, degree
from .poly import UNIT

# weight_rule(g, i, j) -> symbol for the L-edge joining base edges i < j
LineWeightRule = Callable[[Graph, int, int], str]
# incidence_rule(g, v, i) -> symbol for the M-edge joining base vertex v and base edge i
IncidenceWeightRule = Callable[[Graph, int, int], str]

BASE_CLASSES = (
    "cubic-simple",
    "cubic-multigraph",
    "C2",
    "K1",
    "empty",
    "irreducible-multigraph",
)


def _line_pairs(g: Graph) -> List[Tuple[int, int]]:
    # One L-edge per shared endpoint: parallel base edges meet twice and give
    # a doubled L-edge. This is what keeps p(M(.)) invariant when smoothing
    # creates a parallel edge.
    pairs = []
    for inc in g.incidence:
        for i, j in combinations(inc, 2):
            pairs.append((i, j) if i < j else (j, i))
    return sorted(pairs)


def line_graph(g: Graph, weight_rule: Optional[LineWeightRule] = None) -> Graph:
    """L(g): one e-vertex per edge of ``g``, adjacent when the edges share an endpoint.

    Simple whenever ``g`` is; parallel edges of ``g`` give a doubled L-edge.
    """
    roles = [Role("e", i) for i in range(g.m)]
    edges = []
    for i, j in _line_pairs(g):
        w = weight_rule(g, i, j) if weight_rule else UNIT
        edges.append((i, j, w))
    return Graph(roles, edges, multigraph=not g.is_simple())


def middle_graph(
    g: Graph,
    weight_rule: Optional[LineWeightRule] = None,
    incidence_rule: Optional[IncidenceWeightRule] = None,
) -> Graph:
    """M(g) on V(g) followed by E(g).

    Vertex ``v < n`` is the v-vertex of base vertex ``v``; vertex ``n + i`` is
    the e-vertex of base edge ``i``. The two incidence edges of each base edge
    come first (in base edge order), then the line-graph edges.
    """
    n = g.n
    roles = [Role("v", v) for v in range(n)] + [Role("e", i) for i in range(g.m)]
    edges = []
    for i, e in enumerate(g.edges):
        for v in (e.u, e.v):
            w = incidence_rule(g, v, i) if incidence_rule else UNIT
            edges.append((v, n + i, w))
    for i, j in _line_pairs(g):
        w = weight_rule(g, i, j) if weight_rule else UNIT
        edges.append((n + i, n + j, w))
    return Graph(roles, edges, multigraph=not g.is_simple())


def remove_pendant(g: Graph, v: int) -> Graph:
    if degree(g, v) != 1:
        raise PreconditionError(f"vertex {v} has degree {degree(g, v)}, not 1")
    return g.delete_vertices([v])


def smooth_degree_two(g: Graph, u: int) -> Graph:
    """Delete degree-2 vertex ``u`` and join its two neighbours by a new unit edge.

    The new edge is appended last. The result becomes a multigraph if the
    neighbours were already adjacent.
    """
    if degree(g, u) != 2:
        raise PreconditionError(f"vertex {u} has degree {degree(g, u)}, not 2")
    x, y = g.neighbors(u)
    if x == y:
        raise PreconditionError(f"smoothing vertex {u} would create a loop at {x}")
    parallel = any({e.u, e.v} == {x, y} for e in g.edges)
    shrunk = g.delete_vertices([u])
    shift = lambda w: w - (w > u)  # noqa: E731
    edges = list(shrunk.edges) + [(shift(x), shift(y), UNIT)]
    return Graph(shrunk.roles, edges, multigraph=g.multigraph or parallel)


@dataclass(frozen=True)
class ReductionStep:
    kind: str  # "pendant" or "smooth"
    vertex: int
    new_edge: Optional[int] = None

    def to_dict(self) -> dict:
        d = {"op": self.kind, "vertex": self.vertex}
        if self.new_edge is not None:
            d["new_edge"] = self.new_edge
        return d


@dataclass
class ReductionTrace:
    steps: List[ReductionStep] = field(default_factory=list)
    base_class: str = "empty"

    def replay(self, g: Graph) -> Graph:
        for step in self.steps:
            if step.kind == "pendant":
                g = remove_pendant(g, step.vertex)
            else:
                g = smooth_degree_two(g, step.vertex)
        return g

    def to_dict(self) -> dict:
        return {"steps": [s.to_dict() for s in self.steps], "base_class": self.base_class}


def classify_base(g: Graph) -> str:
    if g.n == 0:
        return "empty"
    if g.n == 1:
        return "K1"
    if g.n == 2 and g.m == 2:
        return "C2"
    if g.is_cubic():
        return "cubic-simple" if g.is_simple() else "cubic-multigraph"
    return "irreducible-multigraph"


def reduce_to_base(g: Graph) -> Tuple[Graph, ReductionTrace]:
    """Strip pendants, then smooth degree-2 vertices, until neither applies.

    Lowest vertex id first, pendants always before smoothings. Ends at a
    cubic graph, C2, K1 or the empty graph, except when the only degree-2
    vertices hang on a doubled edge (smoothing them would make a loop); that
    leftover is tagged ``irreducible-multigraph``.
    """
    if len(components(g)) > 1:
        raise PreconditionError("graph is disconnected")
    if g.max_degree() > 3:
        raise PreconditionError(f"maximum degree {g.max_degree()} exceeds 3")
    trace = ReductionTrace()
    while True:
        degs = g.degrees()
        pend = [v for v, d in enumerate(degs) if d == 1]
        if pend:
            g = remove_pendant(g, pend[0])
            trace.steps.append(ReductionStep("pendant", pend[0]))
            continue
        for u, d in enumerate(degs):
            if d == 2:
                x, y = g.neighbors(u)
                if x != y:
                    g = smooth_degree_two(g, u)
                    trace.steps.append(ReductionStep("smooth", u, g.m - 1))
                    break
        else:
            break
    trace.base_class = classify_base(g)
    return g, trace


@dataclass(frozen=True)
class K4Block:
    """The K4 that a base vertex and its three incident edges span inside M(G)."""

    base_vertex: int
    base_edges: Tuple[int, int, int]
    v_vertex: int
    e_vertices: Tuple[int, int, int]
    edge_ids: Tuple[int, ...]  # six M(G) edge ids, sorted

    def matchings(self, mg: Graph) -> List[Tuple[int, int]]:
        """The three perfect matchings of the block as (v-e edge, e-e edge) pairs."""
        out = []
        for ev in self.e_vertices:
            rest = set(self.e_vertices) - {ev}
            ve = ee = None
            for eid in self.edge_ids:
                ends = {mg.edges[eid].u, mg.edges[eid].v}
                if ends == {self.v_vertex, ev}:
                    ve = eid
                elif ends == rest:
                    ee = eid
            out.append((ve, ee))
        return out


def k4_decomposition(mg: Graph) -> List[K4Block]:
    """Split E(M(G)) into the n edge-disjoint K4 blocks, one per base vertex."""
    if any(r.kind == "plain" for r in mg.roles):
        raise PreconditionError("graph carries no v/e role tags")
    lookup: Dict[Tuple[int, int], int] = {}
    for eid, e in enumerate(mg.edges):
        lookup[(min(e.u, e.v), max(e.u, e.v))] = eid
    blocks = []
    used: Dict[int, int] = {}
    for v, role in enumerate(mg.roles):
        if role.kind != "v":
            continue
        nbrs = mg.neighbors(v)
        if len(nbrs) != 3 or any(mg.roles[w].kind != "e" for w in nbrs):
            raise PreconditionError(
                f"base vertex {role.origin} has degree {len(nbrs)}; base graph is not cubic"
            )
        evs = tuple(sorted(nbrs))
        if len(set(evs)) != 3:
            raise PreconditionError("parallel incidence edges; base graph is not simple")
        ids = [lookup[(v, w)] for w in evs]
        for p, q in combinations(evs, 2):
            eid = lookup.get((p, q))
            if eid is None:
                raise PreconditionError(f"e-vertices {p},{q} at base vertex {role.origin} not adjacent")
            ids.append(eid)
        for eid in ids:
            if eid in used:
                raise PreconditionError(
                    f"edge {eid} lies in two blocks; base graph is not simple"
                )
            used[eid] = v
        blocks.append(
            K4Block(
                base_vertex=role.origin if role.origin is not None else v,
                base_edges=tuple(mg.roles[w].origin for w in evs),
                v_vertex=v,
                e_vertices=evs,
                edge_ids=tuple(sorted(ids)),
            )
        )
    if len(used) != mg.m:
        raise PreconditionError("blocks do not cover every edge of the middle graph")
    return blocks
