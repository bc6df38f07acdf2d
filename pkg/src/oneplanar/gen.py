"""Seeded generation of plane and 1-plane drawings.

Families are built directly as rotation systems.  Crossings are synthesized
only inside quadrilateral faces with four distinct true corners, which keeps
crossing vertices pairwise non-adjacent and the recovered graph simple.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .drawing import OnePlaneDrawing, recover_original
from .errors import InputError
from .graphcore import Graph, is_connected, norm_edge
from . import graphcore
from .rng import SplitMix64, as_rng

FAMILIES = ("plane-triangulation", "crossed-quadrangulation", "wheel", "cycle",
            "star", "complete", "named")


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int = 0
    crossing_rate: float = 0.0
    seed: int = 0
    strip_rate: float = 0.0
    hub_bias: float = 0.5
    name: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)


class _Embedding:
    """Mutable rotation system with stable edge ids (removed edges become None)."""

    def __init__(self) -> None:
        self.kinds: list[bool] = []
        self.edges: list[tuple[int, int] | None] = []
        self.rot: list[list[int]] = []

    @classmethod
    def from_drawing(cls, d: OnePlaneDrawing) -> "_Embedding":
        emb = cls()
        emb.kinds = list(d.kinds)
        emb.edges = list(d.edges)
        emb.rot = [list(r) for r in d.rotation]
        return emb

    def add_vertex(self, kind: bool = True) -> int:
        self.kinds.append(kind)
        self.rot.append([])
        return len(self.kinds) - 1

    def _new_edge(self, u: int, v: int) -> int:
        self.edges.append((u, v))
        return len(self.edges) - 1

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def tail(self, dart: int) -> int:
        return self.edges[dart >> 1][dart & 1]

    def dart_from(self, v: int, e: int) -> int:
        return 2 * e if self.edges[e][0] == v else 2 * e + 1

    def next_dart(self, dart: int) -> int:
        e = dart >> 1
        h = self.edges[e][1 - (dart & 1)]
        rot = self.rot[h]
        return self.dart_from(h, rot[(rot.index(e) + 1) % len(rot)])

    def faces(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for e, uv in enumerate(self.edges):
            if uv is None:
                continue
            for start in (2 * e, 2 * e + 1):
                if start in seen:
                    continue
                cyc, d = [], start
                while d not in seen:
                    seen.add(d)
                    cyc.append(d)
                    d = self.next_dart(d)
                out.append(cyc)
        return out

    def face_vertices(self, face: Sequence[int]) -> list[int]:
        return [self.tail(d) for d in face]

    def _insert_at_corner(self, face: Sequence[int], pos: int, e: int) -> None:
        # the face occupies the angle after the edge of the arriving dart
        v = self.tail(face[pos])
        arriving = face[pos - 1] >> 1
        rot = self.rot[v]
        rot.insert(rot.index(arriving) + 1, e)

    def insert_vertex(self, face: Sequence[int], positions: Sequence[int],
                      kind: bool = True, vertex: int | None = None) -> int:
        """Place a (new or isolated) vertex inside ``face`` joined to the given corners."""
        x = self.add_vertex(kind) if vertex is None else vertex
        new = []
        for p in sorted(positions):
            e = self._new_edge(self.tail(face[p]), x)
            self._insert_at_corner(face, p, e)
            new.append(e)
        self.rot[x] = new[::-1]
        return x

    def add_chord(self, face: Sequence[int], p: int, q: int) -> int:
        e = self._new_edge(self.tail(face[p]), self.tail(face[q]))
        self._insert_at_corner(face, p, e)
        self._insert_at_corner(face, q, e)
        return e

    def remove_edge(self, e: int) -> None:
        u, v = self.edges[e]
        self.rot[u].remove(e)
        self.rot[v].remove(e)
        self.edges[e] = None

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def adjacent(self, u: int, v: int) -> bool:
        return any(self.other(e, u) == v for e in self.rot[u])

    def freeze(self) -> OnePlaneDrawing:
        live = [e for e, uv in enumerate(self.edges) if uv is not None]
        new_id = {e: i for i, e in enumerate(live)}
        return OnePlaneDrawing.build(
            self.kinds,
            [self.edges[e] for e in live],
            [[new_id[e] for e in r] for r in self.rot],
        )


# -- plane families -----------------------------------------------------------

def _cycle_embedding(n: int) -> _Embedding:
    emb = _Embedding()
    for _ in range(n):
        emb.add_vertex()
    for i in range(n):
        emb._new_edge(i, (i + 1) % n)
    for i in range(n):
        emb.rot[i] = [(i - 1) % n, i]
    return emb


def plane_cycle(n: int) -> OnePlaneDrawing:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return _cycle_embedding(n).freeze()


def plane_wheel(rim: int) -> OnePlaneDrawing:
    """Hub 0 with spokes to the rim cycle 1..rim."""
    if rim < 3:
        raise InputError("a wheel needs a rim of at least 3 vertices")
    emb = _Embedding()
    emb.add_vertex()
    for _ in range(rim):
        emb.add_vertex()
    for i in range(rim):
        emb._new_edge(1 + i, 1 + (i + 1) % rim)
    for i in range(rim):
        emb.rot[1 + i] = [(i - 1) % rim, i]
    face = emb.faces()[0]
    emb.insert_vertex(face, range(rim), vertex=0)
    return emb.freeze()


def plane_star(leaves: int) -> OnePlaneDrawing:
    emb = _Embedding()
    emb.add_vertex()
    for i in range(leaves):
        leaf = emb.add_vertex()
        e = emb._new_edge(0, leaf)
        emb.rot[leaf] = [e]
        emb.rot[0].append(e)
    return emb.freeze()


def plane_complete(n: int) -> OnePlaneDrawing:
    if n == 1:
        return OnePlaneDrawing.build([True], [], [[]])
    if n == 2:
        return OnePlaneDrawing.build([True, True], [(0, 1)], [[0], [0]])
    if n == 3:
        return plane_cycle(3)
    if n == 4:
        emb = _cycle_embedding(3)
        emb.insert_vertex(emb.faces()[0], range(3))
        return emb.freeze()
    raise InputError("the complete family is plane only for n <= 4; use named K5/K6")


def plane_triangulation(n: int, rng: SplitMix64, flips: int | None = None) -> OnePlaneDrawing:
    """Random stacked triangulation followed by random edge flips."""
    if n < 3:
        raise InputError("a triangulation needs at least 3 vertices")
    emb = _cycle_embedding(3)
    while len(emb.kinds) < n:
        fs = emb.faces()
        emb.insert_vertex(fs[rng.below(len(fs))], range(3))
    for _ in range(n if flips is None else flips):
        live = [e for e, uv in enumerate(emb.edges) if uv is not None]
        _try_flip(emb, rng.choice(live))
    return emb.freeze()


def _face_of(emb: _Embedding, dart: int) -> list[int]:
    cyc, d = [dart], emb.next_dart(dart)
    while d != dart:
        cyc.append(d)
        d = emb.next_dart(d)
    return cyc


def _try_flip(emb: _Embedding, e: int) -> bool:
    u, v = emb.edges[e]
    f1, f2 = _face_of(emb, 2 * e), _face_of(emb, 2 * e + 1)
    if len(f1) != 3 or len(f2) != 3 or emb.degree(u) < 4 or emb.degree(v) < 4:
        return False
    w = emb.tail(f1[2])
    z = emb.tail(f2[2])
    if w == z or emb.adjacent(w, z):
        return False
    emb.remove_edge(e)
    quad = _face_of(emb, f1[1])
    verts = emb.face_vertices(quad)
    emb.add_chord(quad, verts.index(w), verts.index(z))
    return True


def plane_quadrangulation(n: int, rng: SplitMix64, hub_bias: float = 0.5) -> OnePlaneDrawing:
    """Grow a quadrangulation from C4 by splitting faces with degree-2 vertices.

    Each step picks a face ``(a, b, c, d)`` and joins a new vertex to one
    diagonal pair; with probability ``hub_bias`` the pair with the larger
    degree sum is used, so high bias yields K_{2,m}-like hubs.
    """
    if n < 4:
        raise InputError("a quadrangulation needs at least 4 vertices")
    emb = _cycle_embedding(4)
    while len(emb.kinds) < n:
        fs = emb.faces()
        face = fs[rng.below(len(fs))]
        vs = emb.face_vertices(face)
        s0 = emb.degree(vs[0]) + emb.degree(vs[2])
        s1 = emb.degree(vs[1]) + emb.degree(vs[3])
        if rng.random() < hub_bias and s0 != s1:
            pair = (0, 2) if s0 > s1 else (1, 3)
        else:
            pair = (0, 2) if rng.below(2) == 0 else (1, 3)
        emb.insert_vertex(face, pair)
    return emb.freeze()


# -- crossings ----------------------------------------------------------------

def _recovered_pairs(emb: _Embedding) -> set[tuple[int, int]]:
    return set(emb.freeze().segment_map())


def insert_crossings(d: OnePlaneDrawing, rate: float, rng: int | SplitMix64) -> OnePlaneDrawing:
    """Fill a seeded selection of quadrilateral faces with a crossing pair.

    Eligible faces have four distinct true corners and neither diagonal
    already present in the recovered graph.
    """
    d.require_valid()
    rng = as_rng(rng)
    if rate <= 0:
        return d
    emb = _Embedding.from_drawing(d)
    present = set(d.segment_map())
    candidates = []
    for face in emb.faces():
        vs = emb.face_vertices(face)
        if len(vs) == 4 and len(set(vs)) == 4 and all(emb.kinds[v] for v in vs):
            candidates.append(face)
    rng.shuffle(candidates)
    for face in candidates:
        if rng.random() >= rate:
            continue
        vs = emb.face_vertices(face)
        diagonals = {norm_edge(vs[0], vs[2]), norm_edge(vs[1], vs[3])}
        if diagonals & present:
            continue
        emb.insert_vertex(face, range(4), kind=False)
        present |= diagonals
    return emb.freeze()


def open_quadrilaterals(d: OnePlaneDrawing, rate: float, rng: int | SplitMix64,
                        edges: Iterable[tuple[int, int]] | None = None) -> OnePlaneDrawing:
    """Delete uncrossed edges between two true triangles, leaving 4-faces.

    Only edges whose opposite corners are non-adjacent qualify, so a later
    crossing in the new face restores the deleted edge as one of its diagonals.
    ``edges`` restricts the candidates to the given vertex pairs.
    """
    rng = as_rng(rng)
    emb = _Embedding.from_drawing(d)
    wanted = None if edges is None else {norm_edge(*e) for e in edges}
    order = [e for e, uv in enumerate(emb.edges)
             if emb.kinds[uv[0]] and emb.kinds[uv[1]]
             and (wanted is None or norm_edge(*uv) in wanted)]
    rng.shuffle(order)
    for e in order:
        if rate < 1 and rng.random() >= rate:
            continue
        f1, f2 = _face_of(emb, 2 * e), _face_of(emb, 2 * e + 1)
        if len(f1) != 3 or len(f2) != 3 or set(f1) & set(f2):
            continue
        vs = emb.face_vertices(f1) + emb.face_vertices(f2)
        if not all(emb.kinds[v] for v in vs):
            continue
        w, z = emb.tail(f1[2]), emb.tail(f2[2])
        if w == z or norm_edge(w, z) in _recovered_pairs(emb):
            continue
        emb.remove_edge(e)
    return emb.freeze()


def strip_edges(d: OnePlaneDrawing, rate: float, rng: int | SplitMix64) -> OnePlaneDrawing:
    """Delete a seeded fraction of uncrossed edges, keeping minimum degree 2 and connectivity.

    Removing edges next to crossings merges triangles into larger false faces,
    which is where the more interesting face types come from.
    """
    rng = as_rng(rng)
    if rate <= 0:
        return d
    emb = _Embedding.from_drawing(d)
    order = [e for e, (u, v) in enumerate(d.edges) if d.kinds[u] and d.kinds[v]]
    rng.shuffle(order)
    for e in order:
        if rng.random() >= rate:
            continue
        u, v = emb.edges[e]
        if emb.degree(u) < 3 or emb.degree(v) < 3:
            continue
        if 2 * e + 1 in _face_of(emb, 2 * e):
            continue  # bridge of the planarization
        saved = list(emb.rot[u]), list(emb.rot[v])
        emb.remove_edge(e)
        if not is_connected(recover_original(emb.freeze())):
            emb.edges[e] = (u, v)
            emb.rot[u], emb.rot[v] = saved
    return emb.freeze()


def gen_plane(spec: GenSpec) -> OnePlaneDrawing:
    rng = SplitMix64(spec.seed)
    fam = spec.family
    if fam == "plane-triangulation":
        return plane_triangulation(spec.n, rng)
    if fam == "crossed-quadrangulation":
        return plane_quadrangulation(spec.n, rng, spec.hub_bias)
    if fam == "wheel":
        return plane_wheel(spec.n - 1)
    if fam == "cycle":
        return plane_cycle(spec.n)
    if fam == "star":
        return plane_star(spec.n - 1)
    if fam == "complete":
        return plane_complete(spec.n)
    raise InputError(f"family {fam!r} is not a plane family")


def gen_drawing(spec: GenSpec) -> OnePlaneDrawing:
    """Full pipeline: plane base, crossings, then optional edge stripping."""
    if spec.family == "named":
        if spec.name is None:
            raise InputError("family 'named' needs a name")
        return named_drawing(spec.name)
    if spec.family not in FAMILIES:
        raise InputError(f"unknown family {spec.family!r}")
    d = gen_plane(spec)
    rng = SplitMix64(spec.seed ^ 0x5DEECE66D)
    if spec.crossing_rate > 0:
        if spec.family in ("plane-triangulation", "wheel", "complete"):
            d = insert_crossings(open_quadrilaterals(d, spec.crossing_rate, rng), 1.0, rng)
        else:
            d = insert_crossings(d, spec.crossing_rate, rng)
    return strip_edges(d, spec.strip_rate, rng)


# -- straight-line planarization (fixtures) -----------------------------------

def _segment_crossing(p1, p2, p3, p4):
    """Proper intersection point of segments p1p2 and p3p4, or None."""
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (p4[0] - p3[0], p4[1] - p3[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if abs(den) < 1e-12:
        return None
    t = ((p3[0] - p1[0]) * d2[1] - (p3[1] - p1[1]) * d2[0]) / den
    s = ((p3[0] - p1[0]) * d1[1] - (p3[1] - p1[1]) * d1[0]) / den
    eps = 1e-9
    if eps < t < 1 - eps and eps < s < 1 - eps:
        return (p1[0] + t * d1[0], p1[1] + t * d1[1])
    return None


def planarize_straight_line(points: Sequence[tuple[float, float]],
                            edges: Sequence[tuple[int, int]]) -> OnePlaneDrawing:
    """Planarize a straight-line drawing in which every edge is crossed at most once."""
    pts = [tuple(map(float, p)) for p in points]
    crossing_of: dict[int, int] = {}
    crossings = []
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if len({a, b, c, d}) < 4:
                continue
            x = _segment_crossing(pts[a], pts[b], pts[c], pts[d])
            if x is None:
                continue
            if i in crossing_of or j in crossing_of:
                raise InputError(f"edge {edges[i] if i in crossing_of else edges[j]} is crossed twice")
            crossing_of[i] = crossing_of[j] = len(crossings)
            crossings.append((x, i, j))
    kinds = [True] * len(pts) + [False] * len(crossings)
    coords = pts + [x for x, _, _ in crossings]
    segs: list[tuple[int, int]] = []
    for i, (a, b) in enumerate(edges):
        if i in crossing_of:
            x = len(pts) + crossing_of[i]
            segs += [(a, x), (x, b)]
        else:
            segs.append((a, b))
    rotation: list[list[int]] = [[] for _ in kinds]
    for e, (u, v) in enumerate(segs):
        rotation[u].append(e)
        rotation[v].append(e)

    def angle(v: int, e: int) -> float:
        u, w = segs[e]
        o = w if u == v else u
        return math.atan2(coords[o][1] - coords[v][1], coords[o][0] - coords[v][0])

    for v, rot in enumerate(rotation):
        rot.sort(key=lambda e: angle(v, e))
    return OnePlaneDrawing.build(kinds, segs, rotation)


# -- named fixtures -----------------------------------------------------------

_OCTAHEDRON_POINTS = [(0.0, 10.0), (-8.66, -5.0), (8.66, -5.0),
                      (0.0, -2.0), (1.73, 1.0), (-1.73, 1.0)]
# A, B, C outer; a, b, c inner with a opposite A, b opposite B, c opposite C
_OCTAHEDRON_EDGES = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                     (3, 1), (3, 2), (4, 2), (4, 0), (5, 0), (5, 1)]

_CUBE_POINTS = [(-4, -4), (4, -4), (4, 4), (-4, 4), (-1, -1), (1, -1), (1, 1), (-1, 1)]
_CUBE_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
               (0, 4), (1, 5), (2, 6), (3, 7)]


def _named_k6() -> OnePlaneDrawing:
    # Octahedron = K6 minus a perfect matching; each missing edge is routed
    # through a quadrilateral opened by deleting one octahedron edge.
    octa = planarize_straight_line(_OCTAHEDRON_POINTS, _OCTAHEDRON_EDGES)
    opened = open_quadrilaterals(octa, 1.0, 0, edges=[(4, 5), (2, 3), (0, 1)])
    return insert_crossings(opened, 1.0, 0)


def named_drawing(name: str) -> OnePlaneDrawing:
    """Curated fixture drawings."""
    key = name.strip()
    if key == "K3":
        return plane_cycle(3)
    if key == "K4":
        return plane_complete(4)
    if key == "C5":
        return plane_cycle(5)
    if key == "quad-crossing":
        return insert_crossings(plane_cycle(4), 1.0, 0)
    if key == "octahedron":
        return planarize_straight_line(_OCTAHEDRON_POINTS, _OCTAHEDRON_EDGES)
    if key == "K6":
        return _named_k6()
    if key == "crossed-cube":
        return insert_crossings(planarize_straight_line(_CUBE_POINTS, _CUBE_EDGES), 1.0, 0)
    if key == "W18":
        return plane_wheel(18)
    if key == "W20":
        return plane_wheel(20)
    if key == "K2,18":
        return plane_quadrangulation(20, SplitMix64(0), hub_bias=1.0)
    raise InputError(f"unknown named drawing {name!r}")


NAMED_DRAWINGS = ("K3", "K4", "C5", "quad-crossing", "octahedron", "K6", "crossed-cube",
                  "W18", "W20", "K2,18")


def named_graph(name: str) -> Graph:
    """Abstract graph fixtures that are not supplied as drawings."""
    if name == "subdivided-K9":
        return graphcore.subdivide(graphcore.complete(9), 0, 1)
    if name == "K7":
        return graphcore.complete(7)
    if name == "petersen":
        return graphcore.petersen()
    raise InputError(f"unknown named graph {name!r}")


# -- corpus -------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusItem:
    index: int
    spec: GenSpec
    drawing: OnePlaneDrawing


def _corpus_spec(slot: int, rng: SplitMix64) -> GenSpec:
    seed = rng.next_u64()
    if slot in (0, 1, 2):
        return GenSpec("plane-triangulation", rng.randint(10, 80), round(rng.uniform(0, 0.6), 3),
                       seed, round(rng.uniform(0, 0.4), 3))
    if slot in (3, 4):
        return GenSpec("crossed-quadrangulation", rng.randint(10, 60), round(rng.uniform(0, 1), 3),
                       seed, round(rng.uniform(0, 0.3), 3), round(rng.uniform(0.3, 1.0), 3))
    if slot == 5:
        return GenSpec("wheel", rng.randint(11, 30), round(rng.uniform(0, 0.5), 3),
                       seed, round(rng.uniform(0, 0.3), 3))
    if slot == 6:
        return GenSpec("crossed-quadrangulation", rng.randint(12, 40), round(rng.uniform(0, 0.3), 3),
                       seed, 0.0, 1.0)
    if rng.below(3) == 0:
        return GenSpec("cycle", rng.randint(10, 30), 0.0, seed)
    return GenSpec("plane-triangulation", rng.randint(10, 30), round(rng.uniform(0, 0.8), 3),
                   seed, round(rng.uniform(0, 0.2), 3))


def corpus(count: int, seed: int) -> list[CorpusItem]:
    """Connected 1-plane drawings with 10 <= n <= 80 and minimum degree >= 2."""
    rng = SplitMix64(seed)
    out = []
    slot = 0
    while len(out) < count:
        spec = _corpus_spec(slot % 8, rng)
        slot += 1
        d = gen_drawing(spec)
        g = recover_original(d)
        if 10 <= g.n <= 80 and g.min_degree >= 2 and is_connected(g) and d.is_connected():
            out.append(CorpusItem(len(out), spec, d))
    return out


def corpus_stats(items: Sequence[CorpusItem]) -> dict:
    """Counts for reproducibility manifests."""
    rows = []
    for it in items:
        g = recover_original(it.drawing)
        rows.append((it.spec.family, g.n, g.m, g.max_degree, len(it.drawing.false_vertices)))
    fams: dict[str, int] = {}
    for r in rows:
        fams[r[0]] = fams.get(r[0], 0) + 1
    return {
        "instances": len(rows),
        "families": dict(sorted(fams.items())),
        "vertices": sum(r[1] for r in rows),
        "edges": sum(r[2] for r in rows),
        "max_degree": max((r[3] for r in rows), default=0),
        "crossings": sum(r[4] for r in rows),
    }
