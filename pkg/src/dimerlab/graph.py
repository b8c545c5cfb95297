"""Immutable labeled multigraph used for G, L(G), M(G) and the lattices.

Vertices and edges carry dense integer ids ``0..n-1`` / ``0..m-1``.
Every vertex has a role (``plain``, ``v`` or ``e``); every edge carries a
weight symbol from ``{"1", "a", "b", "c", "x", "y", "z"}``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from .errors import GraphError
from .poly import SYMBOLS, UNIT

FORMAT = "dimerlab-graph-v1"
ROLES = ("plain", "v", "e")
WEIGHTS = (UNIT,) + SYMBOLS


@dataclass(frozen=True)
class Role:
    """Vertex role. ``origin`` is the base-graph vertex (``v``) or edge (``e``) id."""

    kind: str = "plain"
    origin: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ROLES:
            raise GraphError(f"unknown vertex role {self.kind!r}")


PLAIN = Role()


class Edge(NamedTuple):
    u: int
    v: int
    weight: str = UNIT

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u


class Graph:
    """Undirected, loop-free graph; parallel edges only when ``multigraph``."""

    def __init__(
        self,
        roles: Sequence[Role] | int,
        edges: Iterable[Tuple[int, int] | Tuple[int, int, str]] = (),
        multigraph: bool = False,
    ):
        if isinstance(roles, int):
            roles = [PLAIN] * roles
        self.roles: Tuple[Role, ...] = tuple(roles)
        self.multigraph = bool(multigraph)
        n = len(self.roles)
        built = []
        seen = set()
        for raw in edges:
            e = Edge(*raw)
            if e.weight not in WEIGHTS:
                raise GraphError(f"unknown weight symbol {e.weight!r}")
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise GraphError(f"edge {len(built)} has endpoint outside 0..{n - 1}")
            if e.u == e.v:
                raise GraphError(f"edge {len(built)} is a loop at vertex {e.u}")
            key = (min(e.u, e.v), max(e.u, e.v))
            if key in seen and not self.multigraph:
                raise GraphError(f"parallel edge {key} in a simple graph")
            seen.add(key)
            built.append(e)
        self.edges: Tuple[Edge, ...] = tuple(built)

    # -- size and structure -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.roles)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        kind = "multigraph" if self.multigraph else "graph"
        return f"<{kind} n={self.n} m={self.m}>"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.roles, self.edges, self.multigraph) == (
            other.roles,
            other.edges,
            other.multigraph,
        )

    def __hash__(self):
        return hash((self.roles, self.edges, self.multigraph))

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """Per vertex, incident edge ids in increasing order."""
        inc: List[List[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            inc[e.u].append(i)
            inc[e.v].append(i)
        return tuple(tuple(x) for x in inc)

    def neighbors(self, v: int) -> List[int]:
        """Neighbors of ``v`` in incident-edge order (repeated for parallel edges)."""
        self._check_vertex(v)
        return [self.edges[i].other(v) for i in self.incidence[v]]

    def degrees(self) -> List[int]:
        return [len(inc) for inc in self.incidence]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_simple(self) -> bool:
        keys = {(min(e.u, e.v), max(e.u, e.v)) for e in self.edges}
        return len(keys) == self.m

    def is_cubic(self) -> bool:
        return self.n > 0 and all(d == 3 for d in self.degrees())

    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    def weights_used(self) -> Set[str]:
        return {e.weight for e in self.edges} - {UNIT}

    def _check_vertex(self, v: int):
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"unknown vertex id {v!r}")

    def _check_edge(self, e: int):
        if not (isinstance(e, int) and 0 <= e < self.m):
            raise GraphError(f"unknown edge id {e!r}")

    # -- derived graphs -----------------------------------------------------

    def delete_edges(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        for e in drop:
            self._check_edge(e)
        kept = [e for i, e in enumerate(self.edges) if i not in drop]
        return Graph(self.roles, kept, self.multigraph)

    def delete_vertices(self, drop: Iterable[int]) -> "Graph":
        """Remove vertices and their edges; survivors are renumbered in order."""
        drop = set(drop)
        for v in drop:
            self._check_vertex(v)
        remap = {}
        roles = []
        for v, r in enumerate(self.roles):
            if v not in drop:
                remap[v] = len(roles)
                roles.append(r)
        kept = [
            (remap[e.u], remap[e.v], e.weight)
            for e in self.edges
            if e.u not in drop and e.v not in drop
        ]
        return Graph(roles, kept, self.multigraph)

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        return self.delete_vertices(v for v in range(self.n) if v not in keep)

    def unweighted(self) -> "Graph":
        return Graph(self.roles, [(e.u, e.v) for e in self.edges], self.multigraph)

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        vertices = []
        for i, r in enumerate(self.roles):
            entry = {"id": i, "role": r.kind}
            if r.origin is not None:
                entry["origin"] = r.origin
            vertices.append(entry)
        return {
            "format": FORMAT,
            "multigraph": self.multigraph,
            "vertices": vertices,
            "edges": [
                {"id": i, "u": e.u, "v": e.v, "weight": e.weight}
                for i, e in enumerate(self.edges)
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        if data.get("format") != FORMAT:
            raise GraphError(f"expected format {FORMAT!r}, got {data.get('format')!r}")
        verts = sorted(data.get("vertices", []), key=lambda d: d["id"])
        if [d["id"] for d in verts] != list(range(len(verts))):
            raise GraphError("vertex ids must be dense 0..n-1")
        roles = [Role(d.get("role", "plain"), d.get("origin")) for d in verts]
        edges = sorted(data.get("edges", []), key=lambda d: d["id"])
        if [d["id"] for d in edges] != list(range(len(edges))):
            raise GraphError("edge ids must be dense 0..m-1")
        return cls(
            roles,
            [(d["u"], d["v"], str(d.get("weight", UNIT))) for d in edges],
            multigraph=bool(data.get("multigraph", False)),
        )

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise GraphError("graph JSON must be an object")
        try:
            return cls.from_dict(data)
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph JSON: {exc!r}") from exc

    def to_dot(self, name: str = "G") -> str:
        """Graphviz source; v-vertices are circles, e-vertices boxes."""
        lines = [f"graph {name} {{"]
        for i, r in enumerate(self.roles):
            shape = {"v": "circle", "e": "box"}.get(r.kind, "ellipse")
            lines.append(f"  {i} [shape={shape}];")
        for e in self.edges:
            label = "" if e.weight == UNIT else f' [label="{e.weight}"]'
            lines.append(f"  {e.u} -- {e.v}{label};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def from_edge_list(n: int, pairs: Iterable[Tuple[int, int]], multigraph: bool = False) -> Graph:
    return Graph(n, list(pairs), multigraph=multigraph)


def degree(g: Graph, v: int) -> int:
    """Number of edge endpoints at ``v``; parallel edges count separately."""
    g._check_vertex(v)
    return len(g.incidence[v])


def components(g: Graph) -> List[List[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for i in g.incidence[u]:
                w = g.edges[i].other(u)
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def bridges(g: Graph) -> Set[int]:
    """Edge ids whose removal disconnects their component.

    Iterative low-link DFS. The tree edge is skipped by id rather than by
    parent vertex, so a parallel copy counts as a back edge and parallel
    edges are never reported.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    out: Set[int] = set()
    clock = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frame: (vertex, edge id used to enter it, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            u, via, pos = stack[-1]
            inc = g.incidence[u]
            if pos < len(inc):
                stack[-1] = (u, via, pos + 1)
                eid = inc[pos]
                if eid == via:
                    continue
                w = g.edges[eid].other(u)
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, eid, 0))
                else:
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        out.add(via)
    return out
