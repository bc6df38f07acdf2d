"""Unavoidable configurations of 1-planar graphs and the objects around them.

Three kinds of witness are detected:

* light edges ``xy`` with ``min(d(x), d(y)) <= 5`` and ``d(x) + d(y) <= 19``
  (``config_a``), or with both degrees ``>= 6`` and sum ``<= 16`` (``config_b``);
* k-alternators / k-alternating subgraphs: an independent set ``X`` of
  vertices of degree ``<= k`` whose neighbours ``Y`` each see enough of ``X``;
* master assignments ``M_k``: every vertex of degree ``<= k`` picks one
  neighbour, and no neighbour is picked more than ``k - 1`` times.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Literal, Union

import networkx as nx

from .drawing import OnePlaneDrawing, recover_original
from .errors import InputError, OnePlanarError, PreconditionError
from .graphcore import Graph, norm_edge

Kind = Literal["alternator", "alternating"]
KINDS: tuple[Kind, ...] = ("alternator", "alternating")
DEFAULT_CAP = 20
BIG_DEGREE = 9


class ScopeExceeded(OnePlanarError):
    """The exact fallback search was skipped because the candidate set is too large."""


# -- face/vertex classification ----------------------------------------------

_RANK = {"F": 0, "S": 1, "B": 2}


def canonical_signature(letters: str) -> str:
    """Least rotation or reflection of a cyclic word over F < S < B."""
    if not letters:
        return ""
    best = None
    for word in (letters, letters[::-1]):
        for i in range(len(word)):
            cand = word[i:] + word[:i]
            key = [_RANK[c] for c in cand]
            if best is None or key < best[0]:
                best = (key, cand)
    return best[1]


@dataclass(frozen=True)
class Classification:
    letters: tuple[str, ...]                     # per drawing vertex: F, B or S
    face_letters: tuple[str, ...]                # per face, boundary order
    signatures: tuple[str, ...]                  # per face, canonical
    hungry: dict[tuple[int, int], bool]          # (face, boundary position) of false vertices
    burdened: tuple[bool, ...]

    def is_big(self, v: int) -> bool:
        return self.letters[v] == "B"

    def is_small(self, v: int) -> bool:
        return self.letters[v] == "S"


def classify(d: OnePlaneDrawing) -> Classification:
    d.require_valid()
    letters = tuple("F" if not d.kinds[v] else ("B" if d.degree(v) >= BIG_DEGREE else "S")
                    for v in range(d.n))
    face_letters, sigs, burdened = [], [], []
    hungry: dict[tuple[int, int], bool] = {}
    for f in d.traced_faces:
        word = "".join(letters[v] for v in f.vertices)
        face_letters.append(word)
        sigs.append(canonical_signature(word))
        burdened.append("S" in word)
        for pos, v in enumerate(f.vertices):
            if letters[v] == "F":
                a, b = f.neighbors_at(pos)
                hungry[(f.index, pos)] = letters[a] == "B" and letters[b] == "B"
    return Classification(letters, tuple(face_letters), tuple(sigs), hungry, tuple(burdened))


# -- light edges ---------------------------------------------------------------

@dataclass(frozen=True)
class ConfigEdge:
    type: Literal["config_a", "config_b"]
    u: int
    v: int
    degrees: tuple[int, int]

    def to_dict(self) -> dict:
        return {"type": self.type, "edge": [self.u, self.v], "degrees": list(self.degrees)}


def find_config_a(g: Graph) -> ConfigEdge | None:
    deg = g.degrees
    for u, v in g.sorted_edges:
        if min(deg[u], deg[v]) <= 5 and deg[u] + deg[v] <= 19:
            return ConfigEdge("config_a", u, v, (deg[u], deg[v]))
    return None


def find_config_b(g: Graph) -> ConfigEdge | None:
    deg = g.degrees
    for u, v in g.sorted_edges:
        if deg[u] >= 6 and deg[v] >= 6 and deg[u] + deg[v] <= 16:
            return ConfigEdge("config_b", u, v, (deg[u], deg[v]))
    return None


def check_config_edge(g: Graph, w: ConfigEdge) -> list[str]:
    if not g.has_edge(w.u, w.v):
        return [f"{w.u}-{w.v} is not an edge"]
    a, b = g.degrees[w.u], g.degrees[w.v]
    if w.type == "config_a":
        ok = min(a, b) <= 5 and a + b <= 19
    else:
        ok = a >= 6 and b >= 6 and a + b <= 16
    return [] if ok else [f"degrees ({a}, {b}) do not satisfy {w.type}"]


# -- alternators ---------------------------------------------------------------

@dataclass(frozen=True)
class AlternatorWitness:
    k: int
    kind: Kind
    X: tuple[int, ...]
    Y: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def type(self) -> str:
        return self.kind

    def to_dict(self) -> dict:
        return {"type": self.kind, "k": self.k, "X": list(self.X), "Y": list(self.Y),
                "edges": [list(e) for e in self.edges]}


def _check_k(g: Graph, k: int) -> None:
    if not (2 <= k <= g.max_degree // 2):
        raise InputError(f"k={k} outside 2..floor(max degree / 2) = {g.max_degree // 2}")


def _threshold(g: Graph, k: int, kind: Kind):
    if kind == "alternator":
        delta = g.max_degree
        return lambda y: g.degrees[y] + k - delta
    if kind == "alternating":
        return lambda y: k
    raise InputError(f"unknown alternator kind {kind!r}")


def _make_witness(g: Graph, k: int, kind: Kind, X) -> AlternatorWitness:
    X = tuple(sorted(X))
    Y = tuple(sorted({y for x in X for y in g.adjacency[x]}))
    edges = tuple(sorted(norm_edge(x, y) for x in X for y in g.adjacency[x]))
    return AlternatorWitness(k, kind, X, Y, edges)


def check_alternator(g: Graph, w: AlternatorWitness) -> list[str]:
    """Re-verify a witness straight from the definition."""
    problems = []
    if not w.X:
        problems.append("X is empty")
    if set(w.X) & set(w.Y):
        problems.append("X and Y intersect")
    F = {norm_edge(*e) for e in w.edges}
    if not F <= g.edges:
        problems.append("F is not a subgraph of G")
    X, Y = set(w.X), set(w.Y)
    dF: dict[int, int] = {}
    for a, b in F:
        if not ((a in X and b in Y) or (b in X and a in Y)):
            problems.append(f"edge {a}-{b} does not join X to Y")
        dF[a] = dF.get(a, 0) + 1
        dF[b] = dF.get(b, 0) + 1
    if not (2 <= w.k <= g.max_degree // 2):
        problems.append(f"k={w.k} out of range")
    for x in w.X:
        if not (dF.get(x, 0) == g.degrees[x] <= w.k):
            problems.append(f"x={x}: d_F={dF.get(x, 0)}, d_G={g.degrees[x]}, k={w.k}")
    if Y != {y for x in X for y in g.adjacency[x]}:
        problems.append("Y is not the neighbourhood of X")
    for y in w.Y:
        t = g.degrees[y] + w.k - g.max_degree if w.kind == "alternator" else w.k
        if dF.get(y, 0) < t:
            problems.append(f"y={y}: d_F={dF.get(y, 0)} below threshold {t}")
    return problems


def peel(g: Graph, candidates, k: int, kind: Kind) -> set[int]:
    """Largest feasible subset of an independent candidate set.

    Feasible sets are closed under union, so repeatedly discarding every
    candidate next to a neighbour that falls short of its threshold leaves the
    unique maximum.
    """
    t = _threshold(g, k, kind)
    X = set(candidates)
    changed = True
    while changed and X:
        changed = False
        seen: dict[int, int] = {}
        for x in X:
            for y in g.adjacency[x]:
                seen[y] = seen.get(y, 0) + 1
        for y in sorted(seen):
            if seen[y] < t(y):
                drop = X.intersection(g.adjacency[y])
                if drop:
                    X -= drop
                    changed = True
                    break
    return X


def _low(g: Graph, k: int) -> list[int]:
    return [v for v in range(g.n) if 1 <= g.degrees[v] <= k]


def _maximal_independent_sets(g: Graph, verts: list[int]) -> Iterator[frozenset[int]]:
    """Maximal independent sets of the subgraph induced by ``verts`` (Bron-Kerbosch
    on the complement, with pivoting)."""
    vs = set(verts)
    non_adj = {v: vs - set(g.adjacency[v]) - {v} for v in verts}

    def expand(R: set[int], P: set[int], Xs: set[int]):
        if not P and not Xs:
            yield frozenset(R)
            return
        pivot = min(P | Xs, key=lambda u: -len(P & non_adj[u]))
        for v in sorted(P - non_adj[pivot]):
            yield from expand(R | {v}, P & non_adj[v], Xs & non_adj[v])
            P = P - {v}
            Xs = Xs | {v}

    yield from expand(set(), set(verts), set())


def find_alternator(g: Graph, k: int, kind: Kind = "alternator",
                    cap: int = DEFAULT_CAP) -> AlternatorWitness | None:
    """Find a k-alternator (or k-alternating subgraph) or prove there is none.

    The seed is the set of low-degree vertices with no low-degree neighbour;
    it is peeled to its maximum feasible subset.  If that comes back empty
    and some low-degree vertices are adjacent, every maximal independent set
    of the low-degree vertices is peeled instead, provided there are at most
    ``cap`` of them; otherwise :class:`ScopeExceeded` is raised.
    """
    _check_k(g, k)
    _threshold(g, k, kind)
    low = _low(g, k)
    low_set = set(low)
    seed = [v for v in low if not low_set.intersection(g.adjacency[v])]
    X = peel(g, seed, k, kind)
    if X:
        return _make_witness(g, k, kind, X)
    if len(seed) == len(low):
        return None
    if len(low) > cap:
        raise ScopeExceeded(f"{len(low)} vertices of degree <= {k} exceed the cap {cap}")
    for mis in _maximal_independent_sets(g, low):
        X = peel(g, mis, k, kind)
        if X:
            return _make_witness(g, k, kind, X)
    return None


def alternator_oracle(g: Graph, k: int, kind: Kind = "alternator",
                      cap: int = DEFAULT_CAP) -> AlternatorWitness | None:
    """Exhaustive reference: try every nonempty independent set of low-degree vertices."""
    _check_k(g, k)
    low = _low(g, k)
    if len(low) > cap:
        raise InputError(f"oracle scope exceeded: {len(low)} candidates > {cap}")
    delta = g.max_degree

    def feasible(X: list[int]) -> bool:
        dF: dict[int, int] = {}
        for x in X:
            for y in g.adjacency[x]:
                dF[y] = dF.get(y, 0) + 1
        for y, c in dF.items():
            need = g.degrees[y] + k - delta if kind == "alternator" else k
            if c < need:
                return False
        return True

    def subsets(i: int, chosen: list[int]):
        if i == len(low):
            if chosen:
                yield chosen
            return
        v = low[i]
        if not any(g.has_edge(v, c) for c in chosen):
            yield from subsets(i + 1, chosen + [v])
        yield from subsets(i + 1, chosen)

    for X in subsets(0, []):
        if feasible(X):
            return _make_witness(g, k, kind, X)
    return None


# -- master assignments ----------------------------------------------------------

@dataclass(frozen=True)
class MasterAssignment:
    k: int
    pairs: dict[int, int]            # client x -> master y
    X: tuple[int, ...]
    Y: tuple[int, ...]

    def loads(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for y in self.pairs.values():
            out[y] = out.get(y, 0) + 1
        return out

    def to_dict(self) -> dict:
        return {"type": "master", "k": self.k, "X": list(self.X), "Y": list(self.Y),
                "pairs": [[x, self.pairs[x]] for x in sorted(self.pairs)]}


@dataclass(frozen=True)
class DeficientSet:
    """Clients ``S`` whose neighbourhood cannot host them: ``|S| > capacity``."""

    k: int
    S: tuple[int, ...]
    neighborhood: tuple[int, ...]
    capacity: int

    def to_dict(self) -> dict:
        return {"type": "deficient", "k": self.k, "S": list(self.S),
                "neighborhood": list(self.neighborhood), "capacity": self.capacity}


def check_master(g: Graph, m: MasterAssignment) -> list[str]:
    problems = []
    X = set(_low(g, m.k))
    if set(m.X) != X:
        problems.append("X differs from the vertices of degree <= k")
    if set(m.pairs) != X:
        problems.append("some client has no master")
    Y = {y for x in X for y in g.adjacency[x]}
    for x, y in m.pairs.items():
        if not g.has_edge(x, y):
            problems.append(f"{x}-{y} is not an edge")
        if y not in Y:
            problems.append(f"master {y} not in Y")
    for y, c in m.loads().items():
        if c > m.k - 1:
            problems.append(f"vertex {y} masters {c} > {m.k - 1} clients")
    return problems


def deficiency_capacity(g: Graph, S, k: int) -> tuple[tuple[int, ...], int]:
    S = set(S)
    nbhd = sorted({y for x in S for y in g.adjacency[x]})
    cap = sum(min(k - 1, len(S.intersection(g.adjacency[y]))) for y in nbhd)
    return tuple(nbhd), cap


def check_deficient(g: Graph, cert: DeficientSet) -> list[str]:
    X = set(_low(g, cert.k))
    if not set(cert.S) <= X:
        return ["S is not a set of low-degree vertices"]
    nbhd, cap = deficiency_capacity(g, cert.S, cert.k)
    if cap != cert.capacity or nbhd != cert.neighborhood:
        return ["recorded capacity does not match the graph"]
    if len(cert.S) <= cap:
        return [f"|S| = {len(cert.S)} does not exceed capacity {cap}"]
    return []


def build_master_assignment(g: Graph, k: int) -> MasterAssignment | DeficientSet:
    """Degree-constrained assignment via maximum flow.

    source -> x (cap 1) -> y (cap 1 per edge) -> sink (cap k - 1).  On a
    short flow the clients on the source side of a minimum cut form a
    deficient set.
    """
    _check_k(g, k)
    X = _low(g, k)
    Y = sorted({y for x in X for y in g.adjacency[x]})
    if not X:
        return MasterAssignment(k, {}, (), ())
    net = nx.DiGraph()
    net.add_node("s")
    for x in X:
        net.add_edge("s", ("x", x), capacity=1)
    for x in X:
        for y in g.adjacency[x]:
            net.add_edge(("x", x), ("y", y), capacity=1)
    for y in Y:
        net.add_edge(("y", y), "t", capacity=k - 1)
    if "t" not in net:
        net.add_node("t")
    value, flow = nx.maximum_flow(net, "s", "t")
    if value == len(X):
        pairs = {}
        for x in X:
            for (_, y), f in flow[("x", x)].items():
                if f > 0:
                    pairs[x] = y
        return MasterAssignment(k, pairs, tuple(X), tuple(Y))
    _, (source_side, _) = nx.minimum_cut(net, "s", "t")
    S = tuple(sorted(node[1] for node in source_side if isinstance(node, tuple) and node[0] == "x"))
    nbhd, cap = deficiency_capacity(g, S, k)
    return DeficientSet(k, S, nbhd, cap)


@dataclass
class MastersChain:
    kind: Kind
    masters: dict[int, MasterAssignment] = field(default_factory=dict)
    blocking: dict[int, AlternatorWitness] = field(default_factory=dict)
    infeasible: dict[int, DeficientSet] = field(default_factory=dict)
    undecided: list[int] = field(default_factory=list)

    def masters_of(self, v: int) -> dict[int, int]:
        return {k: m.pairs[v] for k, m in sorted(self.masters.items()) if v in m.pairs}

    def load_violations(self) -> list[str]:
        """Every vertex may master at most k - 1 clients for each k."""
        out = []
        for k, m in sorted(self.masters.items()):
            for y, c in sorted(m.loads().items()):
                if c > k - 1:
                    out.append(f"k={k}: vertex {y} masters {c} clients")
        return out

    def complete_for(self, g: Graph) -> bool:
        """True when masters exist for every k in 2..5 that has clients."""
        return all(k in self.masters for k in range(2, 6)
                   if _low(g, k))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "masters": {str(k): m.to_dict() for k, m in sorted(self.masters.items())},
            "blocking": {str(k): w.to_dict() for k, w in sorted(self.blocking.items())},
            "infeasible": {str(k): c.to_dict() for k, c in sorted(self.infeasible.items())},
            "undecided": list(self.undecided),
        }


def masters_chain(g: Graph, kind: Kind = "alternator", cap: int = DEFAULT_CAP) -> MastersChain:
    """Masters for k = 2..5, or the alternator that blocks a given k."""
    if g.max_degree < 10:
        raise InputError(f"masters_chain needs max degree >= 10, got {g.max_degree}")
    chain = MastersChain(kind)
    for k in range(2, 6):
        try:
            w = find_alternator(g, k, kind, cap)
        except ScopeExceeded:
            chain.undecided.append(k)
            w = None
        if w is not None:
            chain.blocking[k] = w
            continue
        res = build_master_assignment(g, k)
        if isinstance(res, MasterAssignment):
            chain.masters[k] = res
        else:
            chain.infeasible[k] = res
    return chain


# -- theorem driver ----------------------------------------------------------------

Witness = Union[ConfigEdge, AlternatorWitness]


def check_witness(g: Graph, w: Witness) -> list[str]:
    if isinstance(w, ConfigEdge):
        return check_config_edge(g, w)
    return check_alternator(g, w)


def theorem_witness(g: Graph, kind: Kind = "alternator") -> Witness | None:
    """A verified light edge or low-k alternator of a graph with minimum degree >= 2."""
    if g.n == 0 or g.min_degree < 2:
        raise PreconditionError(f"minimum degree {g.min_degree if g.n else 0} < 2")
    w = find_config_a(g) or find_config_b(g)
    if w is None:
        for k in range(2, min(5, g.max_degree // 2) + 1):
            w = find_alternator(g, k, kind)
            if w is not None:
                break
    if w is not None and check_witness(g, w):
        raise AssertionError(f"witness failed re-verification: {check_witness(g, w)}")
    return w


def structure_theorem_check(d: OnePlaneDrawing, kind: Kind = "alternator") -> Witness | None:
    return theorem_witness(recover_original(d), kind)


def all_witnesses(g: Graph, kinds: tuple[Kind, ...] = KINDS, max_k: int = 5) -> list[dict]:
    """Every detector's answer, for reporting."""
    out: list[dict] = []
    for w in (find_config_a(g), find_config_b(g)):
        if w is not None:
            out.append(w.to_dict())
    for kind in kinds:
        for k in range(2, min(max_k, g.max_degree // 2) + 1):
            try:
                w = find_alternator(g, k, kind)
            except ScopeExceeded as exc:
                out.append({"type": kind, "k": k, "status": "scope-exceeded", "detail": str(exc)})
                continue
            if w is not None:
                out.append(w.to_dict())
    return out
