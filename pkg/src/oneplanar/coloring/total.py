"""Total colouring and (p,1)-total labelling."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..graphcore import Edge, Graph
from .csp import mask_of, solve_separation
from .edge import light_edge_order
from .result import Deadline, SolveResult
from .verify import TotalColoring, TotalLabelling


def _total_constraints(g: Graph, edges: list[Edge], p: int) -> list[tuple[int, int, int]]:
    """Variables ``0..n-1`` are vertices, ``n + i`` is ``edges[i]``."""
    n = g.n
    cons = [(u, v, 1) for u, v in edges]
    at: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        cons.append((u, n + i, p))
        cons.append((v, n + i, p))
        at.setdefault(u, []).append(n + i)
        at.setdefault(v, []).append(n + i)
    for ids in at.values():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                cons.append((ids[a], ids[b], 1))
    return cons


def _tie_order(g: Graph, edges: list[Edge]) -> list[int]:
    ext = list(reversed(light_edge_order(g)))
    rank = {e: i for i, e in enumerate(ext)}
    return [len(edges) + v for v in range(g.n)] + [rank[e] for e in edges]


def list_total_color(g: Graph, vertex_lists: Mapping[int, Iterable[int]],
                     edge_lists: Mapping[Edge, Iterable[int]],
                     timeout: float | None = None) -> SolveResult:
    edges = list(g.sorted_edges)
    doms = [mask_of(vertex_lists[v]) for v in range(g.n)] + [mask_of(edge_lists[e]) for e in edges]
    res = solve_separation(doms, _total_constraints(g, edges, 1), _tie_order(g, edges), timeout)
    if res.found:
        sol = res.solution
        res.solution = TotalColoring({v: sol[v] for v in range(g.n)},
                                     {e: sol[g.n + i] for i, e in enumerate(edges)})
    return res


def total_color_k(g: Graph, k: int, timeout: float | None = None) -> SolveResult:
    """Decide whether a proper total colouring with colours ``1..k`` exists."""
    edges = list(g.sorted_edges)
    full = mask_of(range(1, k + 1))
    res = solve_separation([full] * (g.n + len(edges)), _total_constraints(g, edges, 1),
                           _tie_order(g, edges), timeout, interchangeable=True)
    if res.found:
        sol = res.solution
        res.solution = TotalColoring({v: sol[v] for v in range(g.n)},
                                     {e: sol[g.n + i] for i, e in enumerate(edges)})
    return res


def total_chromatic_number(g: Graph, timeout: float | None = None) -> SolveResult:
    if g.n == 0:
        return SolveResult("found", TotalColoring({}, {}), value=0)
    deadline = Deadline(timeout)
    k = g.max_degree + 1
    while True:
        res = total_color_k(g, k, deadline.remaining())
        if res.status == "timeout":
            res.value = k
            res.info["lower_bound"] = k
            return res
        if res.found:
            res.value = k
            return res
        k += 1


def p1_total_label(g: Graph, p: int, k: int, timeout: float | None = None) -> SolveResult:
    """A (p,1)-total labelling with labels ``0..k``, or proof that none exists."""
    if p < 1 or k < 0:
        raise ValueError("need p >= 1 and k >= 0")
    edges = list(g.sorted_edges)
    full = mask_of(range(k + 1))
    # with p = 1 every constraint is plain inequality, so labels are interchangeable
    res = solve_separation([full] * (g.n + len(edges)), _total_constraints(g, edges, p),
                           _tie_order(g, edges), timeout, interchangeable=p == 1)
    if res.found:
        sol = res.solution
        res.solution = TotalLabelling({v: sol[v] for v in range(g.n)},
                                      {e: sol[g.n + i] for i, e in enumerate(edges)}, p, k)
    return res


def lambda_pT(g: Graph, p: int, timeout: float | None = None) -> SolveResult:
    """Least span of a (p,1)-total labelling, scanning up from ``max(Delta + p - 1, p)``.

    An edgeless graph has span 0.  On timeout ``value`` holds the least span
    not yet ruled out.
    """
    if p < 1:
        raise ValueError("need p >= 1")
    if g.m == 0:
        return SolveResult("found", TotalLabelling({v: 0 for v in range(g.n)}, {}, p, 0), value=0)
    deadline = Deadline(timeout)
    k = max(g.max_degree + p - 1, p)
    while True:
        res = p1_total_label(g, p, k, deadline.remaining())
        if res.status != "none":
            res.value = k
            return res
        k += 1
