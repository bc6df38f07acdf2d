"""Definition-level checkers, kept apart from the solvers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..graphcore import Edge, Graph, norm_edge


@dataclass(frozen=True)
class EdgeColoring:
    colors: dict[Edge, int]
    k: int

    def used(self) -> int:
        return len(set(self.colors.values()))

    def to_dict(self) -> dict:
        return {"k": self.k, "edges": [[u, v, self.colors[(u, v)]] for u, v in sorted(self.colors)]}


@dataclass(frozen=True)
class TotalColoring:
    vertex: dict[int, int]
    edge: dict[Edge, int]

    def to_dict(self) -> dict:
        return {"vertices": [[v, c] for v, c in sorted(self.vertex.items())],
                "edges": [[u, v, c] for (u, v), c in sorted(self.edge.items())]}


@dataclass(frozen=True)
class TotalLabelling:
    vertex: dict[int, int]
    edge: dict[Edge, int]
    p: int
    k: int

    def to_dict(self) -> dict:
        return {"p": self.p, "k": self.k,
                "vertices": [[v, c] for v, c in sorted(self.vertex.items())],
                "edges": [[u, v, c] for (u, v), c in sorted(self.edge.items())]}


def _edges_at(g: Graph) -> list[list[Edge]]:
    at: list[list[Edge]] = [[] for _ in range(g.n)]
    for e in g.sorted_edges:
        at[e[0]].append(e)
        at[e[1]].append(e)
    return at


def verify_edge_coloring(g: Graph, c: EdgeColoring | Mapping[Edge, int],
                         lists: Mapping[Edge, set[int]] | None = None,
                         k: int | None = None) -> list[str]:
    """All violations of properness, palette range and list membership."""
    colors = c.colors if isinstance(c, EdgeColoring) else dict(c)
    if isinstance(c, EdgeColoring) and k is None:
        k = c.k
    problems = []
    for e in g.sorted_edges:
        if e not in colors:
            problems.append(f"edge {e} uncoloured")
    for e in colors:
        if e not in g.edges:
            problems.append(f"{e} is not an edge")
    for v, es in enumerate(_edges_at(g)):
        seen: dict[int, Edge] = {}
        for e in es:
            if e not in colors:
                continue
            col = colors[e]
            if col in seen:
                problems.append(f"edges {seen[col]} and {e} share colour {col} at vertex {v}")
            seen[col] = e
    for e, col in colors.items():
        if k is not None and not (1 <= col <= k):
            problems.append(f"edge {e} colour {col} outside 1..{k}")
        if lists is not None and col not in lists.get(e, ()):
            problems.append(f"edge {e} colour {col} not in its list")
    return problems


def verify_total_coloring(g: Graph, t: TotalColoring,
                          vertex_lists: Mapping[int, set[int]] | None = None,
                          edge_lists: Mapping[Edge, set[int]] | None = None) -> list[str]:
    problems = verify_edge_coloring(g, t.edge, edge_lists)
    for v in range(g.n):
        if v not in t.vertex:
            problems.append(f"vertex {v} uncoloured")
            continue
        if vertex_lists is not None and t.vertex[v] not in vertex_lists.get(v, ()):
            problems.append(f"vertex {v} colour {t.vertex[v]} not in its list")
    for u, v in g.sorted_edges:
        cu, cv, ce = t.vertex.get(u), t.vertex.get(v), t.edge.get((u, v))
        if cu is not None and cu == cv:
            problems.append(f"adjacent vertices {u}, {v} share colour {cu}")
        if ce is not None and ce in (cu, cv):
            problems.append(f"edge {(u, v)} shares colour {ce} with an end")
    return problems


def verify_total_labelling(g: Graph, lab: TotalLabelling) -> list[str]:
    problems = []
    p, k = lab.p, lab.k
    for v in range(g.n):
        if v not in lab.vertex:
            problems.append(f"vertex {v} unlabelled")
    for e in g.sorted_edges:
        if e not in lab.edge:
            problems.append(f"edge {e} unlabelled")
    for x, val in list(lab.vertex.items()) + list(lab.edge.items()):
        if not (0 <= val <= k):
            problems.append(f"{x} label {val} outside 0..{k}")
    for u, v in g.sorted_edges:
        if abs(lab.vertex.get(u, -10**9) - lab.vertex.get(v, 10**9)) < 1:
            problems.append(f"vertices {u}, {v} share a label")
        for w in (u, v):
            if abs(lab.vertex.get(w, -10**9) - lab.edge.get((u, v), 10**9)) < p:
                problems.append(f"vertex {w} and edge {(u, v)} closer than {p}")
    for v, es in enumerate(_edges_at(g)):
        for i in range(len(es)):
            for j in range(i + 1, len(es)):
                if lab.edge.get(es[i]) == lab.edge.get(es[j]):
                    problems.append(f"edges {es[i]}, {es[j]} share a label at {v}")
    return problems


def balance_profile(g: Graph, colors: Mapping[Edge, int], k: int) -> list[list[int]]:
    """``profile[v][i-1]`` counts edges at ``v`` with colour ``i``."""
    prof = [[0] * k for _ in range(g.n)]
    for (u, v), c in colors.items():
        prof[u][c - 1] += 1
        prof[v][c - 1] += 1
    return prof


def verify_equitable(g: Graph, colors: EdgeColoring | Mapping[Edge, int], k: int) -> list[str]:
    """Balance only: equitable colourings need not be proper."""
    if isinstance(colors, EdgeColoring):
        colors = colors.colors
    problems = []
    for e in g.sorted_edges:
        if e not in colors:
            problems.append(f"edge {e} uncoloured")
        elif not (1 <= colors[e] <= k):
            problems.append(f"edge {e} colour {colors[e]} outside 1..{k}")
    if problems:
        return problems
    for v, counts in enumerate(balance_profile(g, colors, k)):
        if max(counts) - min(counts) > 1:
            problems.append(f"vertex {v} colour counts {counts} differ by more than 1")
    return problems


def normalize_coloring(colors: Mapping[tuple[int, int], int]) -> dict[Edge, int]:
    return {norm_edge(u, v): c for (u, v), c in colors.items()}
