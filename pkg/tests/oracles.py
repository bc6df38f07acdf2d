"""Brute-force reference answers written straight from the definitions.

Deliberately naive: fixed element order, chronological backtracking, and
no shared code with the solvers under test.
"""

from __future__ import annotations

import itertools

import networkx as nx

from oneplanar.graphcore import Graph


def atlas_graphs(max_n: int, connected_only: bool = False):
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() > max_n:
            continue
        if connected_only and (h.number_of_nodes() == 0 or not nx.is_connected(h)):
            continue
        yield Graph.from_edges(h.number_of_nodes(), list(h.edges()))


def _elements(g: Graph):
    """Vertices then edges, with the pairs that must differ by at least 1 or by p."""
    edges = sorted(g.edges)
    elems = [("v", v) for v in range(g.n)] + [("e", e) for e in edges]
    return elems


def _conflicts(g: Graph, a, b, p: int) -> int:
    """Required separation between two elements (0 when unconstrained)."""
    if a[0] == "v" and b[0] == "v":
        return 1 if g.has_edge(a[1], b[1]) else 0
    if a[0] == "e" and b[0] == "e":
        return 1 if set(a[1]) & set(b[1]) else 0
    v, e = (a[1], b[1]) if a[0] == "v" else (b[1], a[1])
    return p if v in e else 0


def exists_total_labelling(g: Graph, values, p: int) -> bool:
    """With ``p == 1`` colours are interchangeable, so a value larger than every
    value used so far is only tried once (the smallest such)."""
    values = list(values)
    elems = _elements(g)
    sep = [[_conflicts(g, elems[i], elems[j], p) for j in range(i)] for i in range(len(elems))]
    chosen: list[int] = []

    def rec(i: int) -> bool:
        if i == len(elems):
            return True
        fresh_seen = False
        for x in values:
            if p == 1 and (not chosen or x > max(chosen)):
                if fresh_seen:
                    break
                fresh_seen = True
            if all(abs(x - chosen[j]) >= sep[i][j] for j in range(i) if sep[i][j]):
                chosen.append(x)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    return rec(0)


def total_chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = 1
    while not exists_total_labelling(g, range(1, k + 1), 1):
        k += 1
    return k


def lambda_total(g: Graph, p: int) -> int:
    k = 0
    while not exists_total_labelling(g, range(k + 1), p):
        k += 1
    return k


def edge_colourable(g: Graph, k: int) -> bool:
    """Chronological backtracking over edges in sorted order, colours ``1..k``."""
    edges = sorted(g.edges)
    earlier = [[j for j in range(i) if set(edges[i]) & set(edges[j])] for i in range(len(edges))]
    cols: list[int] = []

    def rec(i: int) -> bool:
        if i == len(edges):
            return True
        for c in range(1, k + 1):
            if all(cols[j] != c for j in earlier[i]):
                cols.append(c)
                if rec(i + 1):
                    return True
                cols.pop()
        return False

    return rec(0)


def chromatic_index(g: Graph) -> int:
    if not g.edges:
        return 0
    k = g.max_degree
    while not edge_colourable(g, k):
        k += 1
    return k


def equitable_exists(g: Graph, k: int) -> bool:
    edges = sorted(g.edges)
    for cols in itertools.product(range(1, k + 1), repeat=len(edges)):
        counts = [[0] * k for _ in range(g.n)]
        for (u, v), c in zip(edges, cols):
            counts[u][c - 1] += 1
            counts[v][c - 1] += 1
        if all(max(c) - min(c) <= 1 for c in counts):
            return True
    return False
