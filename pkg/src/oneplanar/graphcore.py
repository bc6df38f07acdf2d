"""Immutable simple undirected graphs on dense vertex ids ``0..n-1``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InputError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``.  Instances are
    values: every edit returns a new graph.
    """

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise InputError(f"edge ({u}, {v}) is not a normalized pair over 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            e = norm_edge(u, v)
            if e in seen:
                raise InputError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges)

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"unknown vertex {v!r}")

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)


def degree(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return g.degrees[v]


def degree_extremes(g: Graph) -> tuple[int, int]:
    """Return ``(min degree, max degree)``."""
    if g.n == 0:
        raise InputError("degree extremes of the empty graph are undefined")
    return min(g.degrees), max(g.degrees)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    e = norm_edge(u, v)
    if e not in g.edges:
        raise InputError(f"edge {e} is not in the graph")
    return Graph(g.n, g.edges - {e})


def add_edge(g: Graph, u: int, v: int) -> Graph:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise InputError(f"self-loop at vertex {u}")
    e = norm_edge(u, v)
    if e in g.edges:
        raise InputError(f"edge {e} already present")
    return Graph(g.n, g.edges | {e})


def without_isolated(g: Graph) -> tuple[Graph, list[int]]:
    """Drop degree-0 vertices; return the compacted graph and the old ids."""
    keep = [v for v in range(g.n) if g.degrees[v] > 0]
    index = {v: i for i, v in enumerate(keep)}
    return Graph.from_edges(len(keep), ((index[u], index[v]) for u, v in g.edges)), keep


# Small named families used by tests, the generator and the CLI.

def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def wheel(rim: int) -> Graph:
    """Hub 0 joined to the cycle ``1..rim``."""
    spokes = ((0, i) for i in range(1, rim + 1))
    ring = ((i, i % rim + 1) for i in range(1, rim + 1))
    return Graph.from_edges(rim + 1, [*spokes, *ring])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def subdivide(g: Graph, u: int, v: int) -> Graph:
    """Replace edge ``uv`` by a path ``u - w - v`` with the new vertex ``w = n``."""
    h = remove_edge(g, u, v)
    w = g.n
    return Graph.from_edges(g.n + 1, [*h.edges, (u, w), (w, v)])
