"""Elimination sequence along unavoidable configurations."""

from __future__ import annotations

from dataclasses import dataclass

from ..drawing import OnePlaneDrawing, recover_original
from ..graphcore import Edge, Graph
from ..structure import (AlternatorWitness, ConfigEdge, check_witness, find_alternator,
                         find_config_a, find_config_b)


@dataclass(frozen=True)
class ReductionStep:
    witness: ConfigEdge | AlternatorWitness
    removed: tuple[Edge, ...]

    def to_dict(self) -> dict:
        return {"witness": self.witness.to_dict(), "removed": [list(e) for e in self.removed]}


def _next_witness(g: Graph):
    w = find_config_a(g) or find_config_b(g)
    if w is not None:
        return w
    for k in range(2, min(5, g.max_degree // 2) + 1):
        w = find_alternator(g, k, "alternator")
        if w is not None:
            return w
    return None


def reduction_graph_order(g: Graph) -> list[ReductionStep]:
    """Remove the light edge (or the alternator's edges) of each witness in turn.

    Nothing happens when the minimum degree is below 2; otherwise removal
    continues while any witness exists.
    """
    steps: list[ReductionStep] = []
    if g.m == 0 or g.min_degree < 2:
        return steps
    while g.m:
        w = _next_witness(g)
        if w is None:
            break
        if check_witness(g, w):
            raise AssertionError(f"witness failed re-verification: {w}")
        removed = (((w.u, w.v),) if isinstance(w, ConfigEdge) else w.edges)
        steps.append(ReductionStep(w, removed))
        g = Graph(g.n, g.edges - frozenset(removed))
    return steps


def reduction_order(d: OnePlaneDrawing) -> list[ReductionStep]:
    d.require_valid()
    return reduction_graph_order(recover_original(d))
