"""Equitable edge colouring: colour counts at every vertex differ by at most one.

Colourings here need not be proper.  For ``k >= 2`` a vertex of degree
``q k + r`` is split into ``q`` copies of degree ``k`` and one of degree
``r``; a proper ``k``-edge-colouring of the split graph gives every copy
distinct colours, hence counts ``q`` or ``q + 1`` at the original vertex.
The split graph is coloured by fan recolouring with palette ``k``, which is
guaranteed to work when the degree-``k`` copies are pairwise non-adjacent.
When that fails an exact search with count pruning decides the instance.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

from ..errors import InputError
from ..graphcore import Edge, Graph
from .edge import misra_gries
from .result import Deadline, SearchTimeout, SolveResult
from .verify import EdgeColoring, verify_equitable


def split_graph(g: Graph, k: int) -> tuple[Graph, list[int], dict[Edge, Edge]]:
    """Split vertices of degree above ``k``.  Returns the split graph, the owner
    of each copy, and the map from split edges back to edges of ``g``.

    At a split vertex the edges towards other vertices of degree ``>= k`` go to
    the partial copy first, to keep full copies apart.
    """
    deg = g.degrees
    copy_of: dict[tuple[int, Edge], int] = {}
    owner: list[int] = []
    for v in range(g.n):
        es = [(u, v) if u < v else (v, u) for u in g.adjacency[v]]
        d = len(es)
        if d <= k:
            idx = len(owner)
            owner.append(v)
            for e in es:
                copy_of[(v, e)] = idx
            continue
        q, r = divmod(d, k)
        heavy = lambda e: deg[e[0] if e[1] == v else e[1]] >= k
        es.sort(key=lambda e: (not heavy(e), e))
        chunks = []
        if r:
            chunks.append(es[:r])
            es = es[r:]
        chunks += [es[i * k:(i + 1) * k] for i in range(q)]
        for chunk in chunks:
            idx = len(owner)
            owner.append(v)
            for e in chunk:
                copy_of[(v, e)] = idx
    back: dict[Edge, Edge] = {}
    for e in g.sorted_edges:
        a, b = copy_of[(e[0], e)], copy_of[(e[1], e)]
        back[(a, b) if a < b else (b, a)] = e
    h = Graph(len(owner), frozenset(back))
    return h, owner, back


def _split_colour(g: Graph, k: int) -> dict[Edge, int] | None:
    h, owner, back = split_graph(g, k)
    full = [h.degrees[x] == k for x in range(h.n)]
    order = sorted(h.sorted_edges, key=lambda e: (full[e[0]] + full[e[1]], e))
    col = misra_gries(h, k, order, prefer_center=lambda x: full[x])
    if col is None:
        return None
    return {back[e]: c for e, c in col.items()}


def _exact(g: Graph, k: int, deadline: Deadline) -> dict[Edge, int] | None:
    """Backtracking over edges with per-vertex count bounds; colours are symmetric."""
    deg = g.degrees
    q = [d // k for d in deg]
    r = [d % k for d in deg]
    cap = [q[v] + (1 if r[v] else 0) for v in range(g.n)]
    cnt = [[0] * (k + 1) for _ in range(g.n)]
    deficit = [k * q[v] for v in range(g.n)]   # sum over colours of max(0, q - count)
    at_cap = [0] * g.n                          # colours already at q + 1
    rem = list(deg)
    # order edges so vertices get finished early
    order: list[Edge] = []
    placed = set()
    for v in sorted(range(g.n), key=lambda v: (deg[v], v)):
        for u in g.adjacency[v]:
            e = (u, v) if u < v else (v, u)
            if e not in placed:
                placed.add(e)
                order.append(e)
    colour: dict[Edge, int] = {}
    nodes = 0

    def bump(v: int, c: int, s: int) -> bool:
        x = cnt[v][c]
        if s > 0:
            if x + 1 > cap[v]:
                return False
            cnt[v][c] = x + 1
            rem[v] -= 1
            if x < q[v]:
                deficit[v] -= 1
            if r[v] and x + 1 == q[v] + 1:
                at_cap[v] += 1
        else:
            cnt[v][c] = x - 1
            rem[v] += 1
            if x - 1 < q[v]:
                deficit[v] += 1
            if r[v] and x == q[v] + 1:
                at_cap[v] -= 1
        return True

    def ok(v: int) -> bool:
        return deficit[v] <= rem[v] and (not r[v] or at_cap[v] <= r[v])

    def rec(i: int, maxused: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes & 1023 == 0:
            deadline.check()
        if i == len(order):
            return True
        u, v = order[i]
        for c in range(1, min(k, maxused + 1) + 1):
            if cnt[u][c] + 1 > cap[u] or cnt[v][c] + 1 > cap[v]:
                continue
            bump(u, c, 1)
            bump(v, c, 1)
            if ok(u) and ok(v):
                colour[(u, v)] = c
                if rec(i + 1, max(maxused, c)):
                    return True
            bump(u, c, -1)
            bump(v, c, -1)
        return False

    if len(order) + 200 > sys.getrecursionlimit():
        sys.setrecursionlimit(len(order) + 200)
    return dict(colour) if rec(0, 0) else None


def equitable_edge_color(g: Graph, k: int, timeout: float | None = None) -> SolveResult:
    if k < 1:
        raise InputError("k must be at least 1")
    deadline = Deadline(timeout)
    if k == 1 or g.m == 0:
        return SolveResult("found", EdgeColoring({e: 1 for e in g.sorted_edges}, k),
                           info={"method": "trivial"})
    col = _split_colour(g, k)
    if col is not None and not verify_equitable(g, col, k):
        return SolveResult("found", EdgeColoring(col, k), elapsed=deadline.elapsed(),
                           info={"method": "split"})
    try:
        col = _exact(g, k, deadline)
    except SearchTimeout:
        return SolveResult("timeout", elapsed=deadline.elapsed())
    if col is None:
        return SolveResult("none", elapsed=deadline.elapsed(), info={"method": "exhaustive"})
    return SolveResult("found", EdgeColoring(col, k), elapsed=deadline.elapsed(),
                       info={"method": "exhaustive"})


@dataclass
class ThresholdResult:
    """Least ``k`` such that every ``k'`` in ``[k, kmax]`` admits an equitable colouring.

    ``exact`` is true when ``kmax > Delta``: every larger palette also works
    there (a proper colouring is equitable), so the value is unconditional.
    If a timeout interrupted the scan, ``value`` is only an upper bound.
    """

    value: int
    kmax: int
    exact: bool
    status: str
    per_k: dict[int, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"threshold": self.value, "kmax": self.kmax, "exact": self.exact,
                "status": self.status, "per_k": {str(k): s for k, s in sorted(self.per_k.items())}}


def equitable_threshold(g: Graph, kmax: int, timeout: float | None = None) -> ThresholdResult:
    if kmax < 1:
        raise InputError("kmax must be at least 1")
    per_k: dict[int, str] = {}
    exact = kmax > g.max_degree
    for k in range(kmax, 0, -1):
        res = equitable_edge_color(g, k, timeout)
        per_k[k] = res.status
        if res.status == "none":
            return ThresholdResult(k + 1, kmax, exact, "found", per_k)
        if res.status == "timeout":
            return ThresholdResult(k + 1, kmax, False, "timeout", per_k)
    return ThresholdResult(1, kmax, exact, "found", per_k)
