"""Formula-versus-oracle verification suites.

Each suite expands into a list of :class:`Case` objects; :func:`run_case`
computes the closed-form prediction and an independent exact count and
records whether they agree. Cases are plain data, so they can be farmed out
to worker processes; records keep case order regardless.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from . import __version__
from .errors import CapacityError, DimerlabError
from .formulas import (
    pm_kagome_formula,
    pm_kagome_weighted,
    pm_line_formula,
    pm_middle_cubic_even,
    pm_middle_cubic_minus_edge,
    pm_silicate_count,
    pm_silicate_weighted,
    predict_pm_middle,
)
from .graph import Graph, bridges
from .lattices import kagome_torus, named_cubic, random_cubic, random_subcubic, silicate_torus
from .matching import audit_bijection, count_pm, weighted_pm_sum
from .poly import Polynomial
from .transforms import line_graph, middle_graph, reduce_to_base

SUITES = ("line", "middle-even", "minus-edge", "bridge", "bijection", "lattices", "reduction", "engine")


@dataclass(frozen=True)
class Case:
    suite: str
    name: str
    source: tuple  # graph recipe, see build_graph
    extra: tuple = ()


def build_graph(source: tuple) -> Graph:
    kind, *args = source
    if kind == "named":
        return named_cubic(*args)
    if kind == "cubic":
        return random_cubic(*args)
    if kind == "subcubic":
        n, seed, even, extra = args
        return random_subcubic(n, seed, extra=extra, even_edges=even)
    if kind == "kagome":
        return kagome_torus(*args)
    if kind == "silicate":
        return silicate_torus(*args)
    if kind == "middle":
        return middle_graph(build_graph(args[0]))
    raise ValueError(f"unknown graph recipe {source!r}")


def _show(v):
    if isinstance(v, Polynomial):
        return str(v)
    return None if v is None else str(v)


def _compare(case: Case, tag: str, predicted, oracle, details: Optional[dict] = None) -> dict:
    rec = {
        "suite": case.suite,
        "case": case.name,
        "tag": tag,
        "predicted": _show(predicted),
        "oracle": _show(oracle),
        "match": predicted == oracle,
    }
    if details:
        rec["details"] = details
    return rec


def _run(case: Case) -> dict:
    g = build_graph(case.source)
    suite = case.suite
    if suite == "line":
        return _compare(case, "line-subcubic", pm_line_formula(g), count_pm(line_graph(g)))
    if suite == "middle-even":
        return _compare(case, "middle-cubic-even", pm_middle_cubic_even(g), count_pm(middle_graph(g)))
    if suite in ("minus-edge", "bridge"):
        (e,) = case.extra
        res = pm_middle_cubic_minus_edge(g, e)
        rest = g.delete_edges([e])
        oracle = count_pm(middle_graph(rest))
        # the other form: M(g) with the e-vertex of e removed
        other = count_pm(middle_graph(g).delete_vertices([g.n + e]))
        return _compare(case, res.tag, res.value, oracle, {"middle_minus_e_vertex": str(other),
                                                           "forms_agree": other == oracle})
    if suite == "bijection":
        audit = audit_bijection(g)
        return _compare(case, "middle-cubic-even", True, audit.ok, audit.to_dict())
    if suite == "lattices":
        kind, n, m = case.source
        weighted = case.extra == ("weighted",)
        if kind == "kagome":
            if weighted:
                return _compare(case, "kagome-weighted", pm_kagome_weighted(n, m), weighted_pm_sum(g))
            return _compare(case, "kagome-count", pm_kagome_formula(n, m), count_pm(g))
        if weighted:
            return _compare(case, "silicate-weighted", pm_silicate_weighted(n, m), weighted_pm_sum(g))
        return _compare(case, "silicate-count", pm_silicate_count(n, m), count_pm(g))
    if suite == "reduction":
        return _reduction_case(case, g)
    if suite == "engine":
        enum = count_pm(g)
        dp = count_pm(g, "frontier-dp")
        at_one = weighted_pm_sum(g).evaluate()
        parity_ok = g.n % 2 == 0 or enum == 0
        return _compare(case, "engine", dp, enum, {"weighted_at_one": str(at_one),
                                                   "weighted_ok": at_one == enum,
                                                   "parity_ok": parity_ok})
    raise ValueError(f"unknown suite {suite!r}")


def _reduction_case(case: Case, g: Graph) -> dict:
    oracle = count_pm(middle_graph(g))
    base, trace = reduce_to_base(g)
    step_ok = True
    cur = g
    for step in trace.steps:
        cur = type(trace)(steps=[step]).replay(cur)
        if count_pm(middle_graph(cur)) != oracle:
            step_ok = False
            break
    res = predict_pm_middle(g)
    predicted = res.value if res.covered else count_pm(middle_graph(base))
    rec = _compare(case, res.tag, predicted, oracle, {"steps": len(trace.steps),
                                                       "base_class": trace.base_class,
                                                       "steps_conserve": step_ok})
    rec["match"] = rec["match"] and step_ok
    return rec


def run_case(case: Case, timings: bool = False) -> dict:
    start = time.perf_counter()
    try:
        rec = _run(case)
        if "details" in rec:
            d = rec["details"]
            for flag in ("forms_agree", "weighted_ok", "parity_ok"):
                if flag in d:
                    rec["match"] = rec["match"] and d[flag]
    except CapacityError as exc:
        rec = {"suite": case.suite, "case": case.name, "tag": "capacity", "predicted": None,
               "oracle": None, "match": False, "error": str(exc)}
    except DimerlabError as exc:
        rec = {"suite": case.suite, "case": case.name, "tag": "error", "predicted": None,
               "oracle": None, "match": False, "error": f"{type(exc).__name__}: {exc}"}
    if timings:
        rec["seconds"] = round(time.perf_counter() - start, 4)
    return rec


# -- suite definitions -------------------------------------------------------


def cubic_corpus(nmax: int, trials: int, seed: int, sizes=(4, 8, 12)) -> List[tuple]:
    """Random connected cubic graphs with n divisible by 4 (so m is even)."""
    ns = [n for n in sizes if n <= nmax and n % 4 == 0]
    return [("cubic", ns[k % len(ns)], seed * 10_000 + k) for k in range(trials)] if ns else []


def subcubic_corpus(nmax: int, trials: int, seed: int, even: Optional[bool] = None,
                    nmin: int = 2) -> List[tuple]:
    """Random connected graphs with max degree <= 3, cycling size and chord density."""
    span = max(nmax - nmin + 1, 1)
    density = (0.3, 1.0, 2.0)
    return [("subcubic", nmin + k % span, seed * 10_000 + k, even, density[k % 3])
            for k in range(trials)]


def _label(source):
    return "-".join(str(a) for a in source if a is not None)


def build_suite(name: str, nmax: Optional[int] = None, trials: Optional[int] = None,
                seed: int = 0) -> List[Case]:
    if name == "all":
        return [c for s in SUITES for c in build_suite(s, nmax, trials, seed)]
    if name == "line":
        srcs = subcubic_corpus(nmax or 12, trials or 30, seed, even=True, nmin=3)
        return [Case(name, _label(s), s) for s in srcs]
    if name == "middle-even":
        srcs = [("named", "K4"), ("named", "cube")] + cubic_corpus(nmax or 12, trials or 30, seed)
        return [Case(name, _label(s), s) for s in srcs]
    if name == "minus-edge":
        cases = []
        for gname in ("petersen", "K33", "prism"):
            g = named_cubic(gname)
            cases += [Case(name, f"{gname}-e{e}", ("named", gname), (e,)) for e in range(g.m)]
        return cases
    if name == "bridge":
        cases = []
        for gname in ("bridged10", "bridged14"):
            (e,) = bridges(named_cubic(gname))
            cases.append(Case(name, f"{gname}-bridge", ("named", gname), (e,)))
        return cases
    if name == "bijection":
        srcs = [("named", "K4"), ("named", "cube")] + cubic_corpus(nmax or 12, trials or 30, seed)
        return [Case(name, _label(s), s) for s in srcs]
    if name == "lattices":
        return [
            Case(name, "kagome-2x2", ("kagome", 2, 2)),
            Case(name, "kagome-2x3", ("kagome", 2, 3)),
            Case(name, "kagome-2x2-weighted", ("kagome", 2, 2), ("weighted",)),
            Case(name, "silicate-2x2", ("silicate", 2, 2)),
            Case(name, "silicate-2x2-weighted", ("silicate", 2, 2), ("weighted",)),
        ]
    if name == "reduction":
        # odd-indexed cases get m of the same parity as n, so |V(M)| is even
        srcs = [
            src[:3] + ((src[1] % 2 == 0) if k % 2 and src[1] > 2 else None,) + src[4:]
            for k, src in enumerate(subcubic_corpus(nmax or 10, trials or 50, seed, nmin=2))
        ]
        return [Case(name, _label(s), s) for s in srcs]
    if name == "engine":
        srcs = [("named", g) for g in ("K4", "K33", "prism", "cube", "petersen", "bridged10", "bridged14")]
        srcs += [("middle", ("named", "K4")), ("kagome", 2, 2), ("kagome", 2, 3)]
        srcs += subcubic_corpus(min(nmax or 16, 16), trials or 30, seed, nmin=1)
        return [Case(name, _label(s) if s[0] != "middle" else "M-K4", s) for s in srcs]
    raise ValueError(f"unknown suite {name!r}")


@dataclass
class VerificationReport:
    suite: str
    seed: int
    records: List[dict] = field(default_factory=list)
    version: str = __version__

    @property
    def summary(self) -> Dict[str, int]:
        return {
            "total": len(self.records),
            "matched": sum(1 for r in self.records if r["match"]),
            "mismatched": sum(1 for r in self.records if not r["match"] and "error" not in r),
            "errors": sum(1 for r in self.records if "error" in r),
        }

    @property
    def ok(self) -> bool:
        return all(r["match"] for r in self.records)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "version": self.version,
                "summary": self.summary, "records": self.records}


def verify(suite: str = "all", nmax: Optional[int] = None, trials: Optional[int] = None,
           seed: int = 0, jobs: int = 1, timings: bool = False) -> VerificationReport:
    cases = build_suite(suite, nmax, trials, seed)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(run_case, cases, [timings] * len(cases)))
    else:
        records = [run_case(c, timings) for c in cases]
    return VerificationReport(suite=suite, seed=seed, records=records)
