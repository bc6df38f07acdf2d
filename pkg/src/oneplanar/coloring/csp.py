"""Backtracking over integer labels with pairwise separation constraints.

Each variable has a finite domain (a bitmask of allowed values) and each
constraint ``(u, v, s)`` demands ``|x_u - x_v| >= s``.  Proper (list) edge and
total colourings are the case ``s = 1``; (p,1)-total labellings mix ``s = 1``
and ``s = p``.  Search uses forward checking, smallest-domain-first variable
choice with a static tie-break order, and lowest-value-first.
"""

from __future__ import annotations

import sys
from typing import Sequence

from .result import Deadline, SearchTimeout, SolveResult


def mask_of(values) -> int:
    m = 0
    for c in values:
        if c < 0:
            raise ValueError("labels must be non-negative")
        m |= 1 << c
    return m


def values_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _band(c: int, s: int) -> int:
    lo = max(0, c - s + 1)
    return ((1 << (c + s - lo)) - 1) << lo


def solve_separation(domains: Sequence[int], constraints: Sequence[tuple[int, int, int]],
                     tie_order: Sequence[int] | None = None, timeout: float | None = None,
                     interchangeable: bool = False) -> SolveResult:
    """Find an assignment or prove there is none.

    ``interchangeable`` declares all values symmetric (identical domains,
    unit separations); a fresh value is then only tried as the least unused
    one.
    """
    n = len(domains)
    dom = list(domains)
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, s in constraints:
        if u == v:
            raise ValueError("constraint joins a variable to itself")
        nbrs[u].append((v, s))
        nbrs[v].append((u, s))
    rank = list(tie_order) if tie_order is not None else list(range(n))
    value = [-1] * n
    unassigned = set(range(n))
    deadline = Deadline(timeout)
    nodes = 0

    def rec(maxused: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes & 511 == 0:
            deadline.check()
        if not unassigned:
            return True
        v = min(unassigned, key=lambda u: (dom[u].bit_count(), rank[u]))
        cand = dom[v]
        if interchangeable:
            cand &= (1 << (maxused + 2)) - 1
        unassigned.discard(v)
        for c in values_of(cand):
            trail = []
            ok = True
            for u, s in nbrs[v]:
                if value[u] < 0:
                    nd = dom[u] & ~_band(c, s)
                    if nd != dom[u]:
                        trail.append((u, dom[u]))
                        dom[u] = nd
                        if not nd:
                            ok = False
                            break
            if ok:
                value[v] = c
                if rec(max(maxused, c)):
                    return True
                value[v] = -1
            for u, d in trail:
                dom[u] = d
        unassigned.add(v)
        return False

    if any(d == 0 for d in dom):
        return SolveResult("none", elapsed=deadline.elapsed())
    if n + 200 > sys.getrecursionlimit():
        sys.setrecursionlimit(n + 200)
    lowest = min((d & -d).bit_length() - 1 for d in dom) if dom else 0
    try:
        ok = rec(lowest - 1)
    except SearchTimeout:
        return SolveResult("timeout", nodes=nodes, elapsed=deadline.elapsed())
    if ok:
        return SolveResult("found", solution=list(value), nodes=nodes, elapsed=deadline.elapsed())
    return SolveResult("none", nodes=nodes, elapsed=deadline.elapsed())
