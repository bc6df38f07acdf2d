"""Proper and list edge colouring."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from ..graphcore import Edge, Graph
from .csp import mask_of, solve_separation
from .result import SolveResult
from .verify import EdgeColoring


def light_edge_order(g: Graph) -> list[Edge]:
    """Edges in removal order: each step deletes an edge minimising ``d(x) + d(y)``
    in what is left (ties by edge).  Colouring proceeds in the reverse order,
    so light edges are extended last."""
    deg = list(g.degrees)
    left = set(g.edges)
    out = []
    while left:
        e = min(left, key=lambda e: (deg[e[0]] + deg[e[1]], e))
        left.remove(e)
        deg[e[0]] -= 1
        deg[e[1]] -= 1
        out.append(e)
    return out


def _edge_constraints(edges: list[Edge]) -> list[tuple[int, int, int]]:
    at: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        at.setdefault(u, []).append(i)
        at.setdefault(v, []).append(i)
    cons = []
    for ids in at.values():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                cons.append((ids[a], ids[b], 1))
    return cons


# -- Misra-Gries fan recolouring ----------------------------------------------------

def misra_gries(g: Graph, palette: int | None = None,
                order: Iterable[Edge] | None = None,
                prefer_center: Callable[[int], bool] | None = None) -> dict[Edge, int] | None:
    """Fan/path recolouring with colours ``1..palette`` (default ``Delta + 1``).

    Always succeeds with ``Delta + 1`` colours.  With a smaller palette it
    succeeds whenever every fan vertex and centre still has a free colour,
    and returns ``None`` otherwise.  ``prefer_center(v)`` makes ``v`` the fan
    centre of its edges when true.
    """
    k = palette if palette is not None else g.max_degree + 1
    at: list[dict[int, int]] = [{} for _ in range(g.n)]   # colour -> neighbour
    colour: dict[Edge, int] = {}

    def put(a: int, b: int, c: int) -> None:
        colour[(a, b) if a < b else (b, a)] = c
        at[a][c] = b
        at[b][c] = a

    def drop(a: int, b: int) -> int:
        c = colour.pop((a, b) if a < b else (b, a))
        del at[a][c]
        del at[b][c]
        return c

    def free(v: int) -> int | None:
        for c in range(1, k + 1):
            if c not in at[v]:
                return c
        return None

    for u, v in (order if order is not None else g.sorted_edges):
        if prefer_center is not None and prefer_center(v) and not prefer_center(u):
            u, v = v, u
        fan = [v]
        seen = {v}
        while True:
            last = fan[-1]
            nxt = None
            for c in range(1, k + 1):
                if c not in at[last] and c in at[u] and at[u][c] not in seen:
                    nxt = at[u][c]
                    break
            if nxt is None:
                break
            fan.append(nxt)
            seen.add(nxt)
        c, d = free(u), free(fan[-1])
        if c is None or d is None:
            return None
        # swap c and d along the path leaving u on its d-edge
        path = []
        x, want = u, d
        while want in at[x]:
            y = at[x][want]
            path.append((x, y))
            x, want = y, (c if want == d else d)
        old = [drop(a, b) for a, b in path]
        for (a, b), col in zip(path, old):
            put(a, b, c if col == d else d)
        # first fan prefix that is still a fan and ends where d is free
        w = None
        for i, f in enumerate(fan):
            if i > 0:
                e = (u, f) if u < f else (f, u)
                if colour.get(e) is None or colour[e] in at[fan[i - 1]]:
                    break
            if d not in at[f]:
                w = i
                break
        if w is None or d in at[u]:
            return None
        shifted = [colour[(u, fan[j + 1]) if u < fan[j + 1] else (fan[j + 1], u)] for j in range(w)]
        for j in range(1, w + 1):
            drop(u, fan[j])
        for j in range(w):
            put(u, fan[j], shifted[j])
        put(u, fan[w], d)
    return colour


def vizing_edge_color(g: Graph) -> EdgeColoring:
    """Proper edge colouring with at most ``Delta + 1`` colours."""
    k = g.max_degree + 1
    col = misra_gries(g, k)
    if col is None:  # cannot happen with Delta + 1 colours
        raise AssertionError("fan recolouring failed with Delta + 1 colours")
    return EdgeColoring(col, k)


# -- exact search ----------------------------------------------------------------------

def edge_color_k(g: Graph, k: int, timeout: float | None = None) -> SolveResult:
    """Decide proper ``k``-edge-colourability by backtracking."""
    edges = sorted(g.sorted_edges, key=lambda e: (-max(g.degrees[e[0]], g.degrees[e[1]]), e))
    if k < g.max_degree:
        return SolveResult("none", info={"reason": "k < max degree"})
    full = mask_of(range(1, k + 1))
    res = solve_separation([full] * len(edges), _edge_constraints(edges),
                           timeout=timeout, interchangeable=True)
    if res.found:
        res.solution = EdgeColoring({e: c for e, c in zip(edges, res.solution)}, k)
    return res


def exact_chromatic_index(g: Graph, timeout: float | None = None) -> SolveResult:
    """``value`` is Delta or Delta + 1, with a witness colouring; or a timeout."""
    delta = g.max_degree
    if g.m == 0:
        return SolveResult("found", EdgeColoring({}, 0), value=0)
    res = edge_color_k(g, delta, timeout)
    if res.found:
        res.value = delta
    elif res.status == "none":
        res = SolveResult("found", vizing_edge_color(g), value=delta + 1,
                          nodes=res.nodes, elapsed=res.elapsed)
    return res


def list_edge_color(g: Graph, lists: Mapping[Edge, Iterable[int]],
                    timeout: float | None = None) -> SolveResult:
    """Colour each edge from its own list, adjacent edges differing."""
    for e in g.sorted_edges:
        if not list(lists.get(e, ())):
            raise ValueError(f"edge {e} has an empty list")
    ext = list(reversed(light_edge_order(g)))
    rank = {e: i for i, e in enumerate(ext)}
    edges = g.sorted_edges
    res = solve_separation([mask_of(lists[e]) for e in edges], _edge_constraints(list(edges)),
                           tie_order=[rank[e] for e in edges], timeout=timeout)
    if res.found:
        k = max((max(lists[e]) for e in edges), default=0)
        res.solution = EdgeColoring({e: c for e, c in zip(edges, res.solution)}, k)
    return res


def uniform_lists(g: Graph, k: int) -> dict[Edge, set[int]]:
    return {e: set(range(1, k + 1)) for e in g.sorted_edges}


def random_lists(g: Graph, size: int, universe: int, rng) -> dict[Edge, set[int]]:
    """Each edge gets ``size`` colours drawn without replacement from ``1..universe``."""
    return {e: set(rng.sample(range(1, universe + 1), size)) for e in g.sorted_edges}
