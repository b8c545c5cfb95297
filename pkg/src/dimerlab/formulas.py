"""Closed-form dimer counts for line and middle graphs of (sub)cubic graphs.

All arithmetic is exact integer exponentiation. Every predictor checks its
hypotheses and raises :class:`PreconditionError` naming the one that fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import PreconditionError
from .graph import Graph, bridges, components
from .poly import Polynomial
from .transforms import ReductionTrace, reduce_to_base

TAGS = (
    "line-subcubic",
    "middle-cubic-even",
    "middle-cubic-minus-edge",
    "middle-cubic-minus-bridge-even",
    "middle-cubic-minus-bridge-odd",
    "kagome-count",
    "kagome-weighted",
    "silicate-weighted",
    "silicate-count",
    "base-C2",
    "base-empty",
    "base-K1",
    "parity-zero",
    "not-covered",
)


@dataclass
class PredictionResult:
    value: Optional[Union[int, Polynomial]]
    tag: str
    trace: Optional[ReductionTrace] = None

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown tag {self.tag!r}")
        if self.tag == "not-covered" and self.value is not None:
            raise ValueError("not-covered results carry no value")

    @property
    def covered(self) -> bool:
        return self.tag != "not-covered"

    def to_dict(self) -> dict:
        if isinstance(self.value, Polynomial):
            value = self.value.to_json()
        else:
            value = None if self.value is None else str(self.value)
        return {
            "value": value,
            "tag": self.tag,
            "trace": self.trace.to_dict()["steps"] if self.trace else [],
        }


def _require(cond, message):
    if not cond:
        raise PreconditionError(message)


def _require_connected(g):
    _require(len(components(g)) == 1, "graph is not connected")


def _require_cubic_simple(g):
    _require_connected(g)
    _require(g.is_simple(), "graph is not simple")
    _require(g.is_cubic(), "graph is not cubic")


def pm_line_formula(g: Graph) -> int:
    """Perfect matchings of L(g) for connected simple g with max degree <= 3 and even m."""
    _require_connected(g)
    _require(g.is_simple(), "graph is not simple")
    _require(g.max_degree() <= 3, f"maximum degree {g.max_degree()} exceeds 3")
    _require(g.m % 2 == 0, f"edge count {g.m} is odd")
    return 2 ** (g.m - g.n + 1)


def middle_cubic_even_count(n: int) -> int:
    """2^(n/2+1) 3^(n/4): perfect matchings of M(G) for cubic G on n vertices, 4 | n."""
    if n % 4:
        raise PreconditionError(f"n = {n} is not divisible by 4")
    return 2 ** (n // 2 + 1) * 3 ** (n // 4)


def pm_middle_cubic_even(g: Graph) -> int:
    _require_cubic_simple(g)
    _require(g.m % 2 == 0, f"edge count {g.m} is odd")
    n, m = g.n, g.m
    value = 2 ** (m - n + 1) * 3 ** ((2 * n - m) // 2)
    assert value == middle_cubic_even_count(n)
    return value


def pm_middle_cubic_minus_edge(g: Graph, e: int) -> PredictionResult:
    """Perfect matchings of M(g - e) for connected simple cubic g with m odd.

    A non-bridge ``e`` gives 2^(n/2) 3^((n-2)/4). If ``e`` is a bridge the two
    sides must agree in edge parity: both even gives 0, both odd gives
    2^(n/2+1) 3^((n-2)/4).
    """
    _require_cubic_simple(g)
    _require(g.m % 2 == 1, f"edge count {g.m} is even")
    _require(isinstance(e, int) and 0 <= e < g.m, f"unknown edge id {e!r}")
    n, m = g.n, g.m
    if e not in bridges(g):
        value = 2 ** (m - n) * 3 ** ((2 * n - m - 1) // 2)
        assert value == 2 ** (n // 2) * 3 ** ((n - 2) // 4)
        return PredictionResult(value, "middle-cubic-minus-edge")

    rest = g.delete_edges([e])
    comps = components(rest)
    assert len(comps) == 2, "a bridge splits a connected graph in two"
    sizes = []
    for comp in comps:
        cset = set(comp)
        ni = len(comp)
        mi = sum(1 for ed in rest.edges if ed.u in cset)
        # one endpoint of the bridge is the only degree-2 vertex on each side
        assert 3 * (ni - 1) + 2 == 2 * mi, (ni, mi)
        assert ni % 2 == 1, ni
        sizes.append((ni, mi))
    (n1, m1), (n2, m2) = sizes
    assert m1 % 2 == m2 % 2, "bridge sides of an odd cubic graph share edge parity"
    if m1 % 2 == 0:
        return PredictionResult(0, "middle-cubic-minus-bridge-even")
    value = 2 ** (m - n + 1) * 3 ** ((2 * n - m - 1) // 2)
    assert value == 2 ** (n // 2 + 1) * 3 ** ((n - 2) // 4)
    side = lambda ni, mi: 2 ** (mi - ni + 1) * 3 ** ((2 * ni - mi - 1) // 2)  # noqa: E731
    assert value == side(n1, m1) * side(n2, m2)
    return PredictionResult(value, "middle-cubic-minus-bridge-odd")


def predict_pm_middle(h: Graph) -> PredictionResult:
    """Predict p(M(h)) for connected h with max degree <= 3 via reduction.

    Cubic multigraph bases and bases stuck on a doubled edge come back as
    ``not-covered``; resolve those with an exact counter.
    """
    _require(len(components(h)) <= 1, "graph is not connected")
    _require(h.max_degree() <= 3, f"maximum degree {h.max_degree()} exceeds 3")
    if (h.n + h.m) % 2:
        return PredictionResult(0, "parity-zero")
    base, trace = reduce_to_base(h)
    kind = trace.base_class
    if kind == "cubic-simple":
        assert base.m % 2 == 0, "reductions preserve the parity of n + m"
        return PredictionResult(pm_middle_cubic_even(base), "middle-cubic-even", trace)
    if kind == "C2":
        return PredictionResult(2, "base-C2", trace)
    if kind == "empty":
        return PredictionResult(1, "base-empty", trace)
    if kind == "K1":
        return PredictionResult(0, "base-K1", trace)
    return PredictionResult(None, "not-covered", trace)


# -- toroidal lattices -------------------------------------------------------


def _require_torus(n, m):
    _require(n >= 2 and m >= 2, f"torus {n}x{m} is below the 2x2 minimum")
    _require((n * m) % 2 == 0, f"mn = {n * m} is odd")


def pm_kagome_formula(n: int, m: int) -> int:
    _require_torus(n, m)
    return 2 ** (m * n + 1)


def pm_kagome_weighted(n: int, m: int) -> Polynomial:
    _require_torus(n, m)
    abc = Polynomial.symbol("a") * Polynomial.symbol("b") * Polynomial.symbol("c")
    return 2 ** (m * n + 1) * abc ** (m * n // 2)


def pm_silicate_weighted(n: int, m: int) -> Polynomial:
    _require_torus(n, m)
    sym = Polynomial.symbol
    xyz = sym("x") * sym("y") * sym("z")
    block = sym("a") * sym("x") + sym("b") * sym("y") + sym("c") * sym("z")
    half = m * n // 2
    return 2 ** (m * n + 1) * xyz ** half * block ** half


def pm_silicate_count(n: int, m: int) -> int:
    _require_torus(n, m)
    return 2 ** (m * n + 1) * 3 ** (m * n // 2)
