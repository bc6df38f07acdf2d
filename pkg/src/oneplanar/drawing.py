"""1-plane drawings represented by their planarization.

A drawing is stored as the plane graph obtained by replacing every crossing
with a degree-4 *false* vertex.  The embedding is a rotation system: for each
vertex the counterclockwise cyclic order of its incident edge ids.  Half-edges
("darts") are numbered ``2*e`` for ``u -> v`` and ``2*e + 1`` for ``v -> u``
where ``edges[e] == (u, v)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .errors import DrawingError, PreconditionError, ValidationError
from .graphcore import Graph, norm_edge


@dataclass(frozen=True)
class Face:
    index: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]
    is_false: bool

    @property
    def degree(self) -> int:
        return len(self.darts)

    def neighbors_at(self, pos: int) -> tuple[int, int]:
        """Boundary predecessor and successor of the vertex at ``pos``."""
        k = len(self.vertices)
        return self.vertices[pos - 1], self.vertices[(pos + 1) % k]


@dataclass(frozen=True)
class Violation:
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


@dataclass(frozen=True)
class Finding:
    part: str
    message: str
    where: tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class OnePlaneDrawing:
    """Planarization of a 1-plane drawing.

    ``kinds[v]`` is True for true (original) vertices and False for crossing
    vertices.  ``rotation[v]`` lists the edge ids at ``v`` counterclockwise.
    """

    kinds: tuple[bool, ...]
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.kinds)
        if len(self.rotation) != n:
            raise DrawingError(f"rotation has {len(self.rotation)} entries for {n} vertices")
        incident: list[set[int]] = [set() for _ in range(n)]
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise DrawingError(f"edge {e} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise DrawingError(f"edge {e} is a loop at vertex {u}")
            incident[u].add(e)
            incident[v].add(e)
        for v, rot in enumerate(self.rotation):
            if len(set(rot)) != len(rot):
                raise DrawingError(f"rotation at vertex {v} lists a half-edge twice")
            if set(rot) != incident[v]:
                extra = sorted(set(rot) - incident[v])
                missing = sorted(incident[v] - set(rot))
                raise DrawingError(
                    f"rotation at vertex {v} does not match its incident edges "
                    f"(extra {extra}, missing {missing})"
                )

    @classmethod
    def build(cls, kinds: Sequence[bool], edges: Sequence[tuple[int, int]],
              rotation: Sequence[Sequence[int]]) -> "OnePlaneDrawing":
        return cls(tuple(bool(k) for k in kinds),
                   tuple((int(u), int(v)) for u, v in edges),
                   tuple(tuple(int(e) for e in r) for r in rotation))

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.kinds)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def is_true(self, v: int) -> bool:
        return self.kinds[v]

    @cached_property
    def true_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, k in enumerate(self.kinds) if k)

    @cached_property
    def false_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, k in enumerate(self.kinds) if not k)

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def neighbors(self, v: int) -> list[int]:
        return [self.other_end(e, v) for e in self.rotation[v]]

    # -- darts and faces ---------------------------------------------------

    def tail(self, dart: int) -> int:
        return self.edges[dart >> 1][dart & 1]

    def head(self, dart: int) -> int:
        return self.edges[dart >> 1][1 - (dart & 1)]

    def dart_from(self, v: int, e: int) -> int:
        return 2 * e if self.edges[e][0] == v else 2 * e + 1

    @cached_property
    def _rotation_pos(self) -> tuple[dict[int, int], ...]:
        return tuple({e: i for i, e in enumerate(rot)} for rot in self.rotation)

    def next_dart(self, dart: int) -> int:
        h = self.head(dart)
        rot = self.rotation[h]
        i = self._rotation_pos[h][dart >> 1]
        return self.dart_from(h, rot[(i + 1) % len(rot)])

    @cached_property
    def traced_faces(self) -> tuple[Face, ...]:
        """Face cycles of the rotation system, without any validity check."""
        if not self.edges:
            return (Face(0, (), (), False),) if self.n else ()
        seen = [False] * (2 * self.m)
        faces = []
        for start in range(2 * self.m):
            if seen[start]:
                continue
            cycle = []
            d = start
            while not seen[d]:
                seen[d] = True
                cycle.append(d)
                d = self.next_dart(d)
            verts = tuple(self.tail(x) for x in cycle)
            faces.append(Face(len(faces), tuple(cycle), verts,
                              any(not self.kinds[v] for v in verts)))
        return tuple(faces)

    @cached_property
    def dart_face(self) -> tuple[int, ...]:
        owner = [0] * (2 * self.m)
        for f in self.traced_faces:
            for d in f.darts:
                owner[d] = f.index
        return tuple(owner)

    def incident_faces(self, v: int) -> list[int]:
        """Faces met around ``v``, one entry per angle (with multiplicity)."""
        return [self.dart_face[self.dart_from(v, e)] for e in self.rotation[v]]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.neighbors(u):
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- recovery ----------------------------------------------------------

    @cached_property
    def true_index(self) -> dict[int, int]:
        """Map drawing vertex id -> vertex id in the recovered graph."""
        return {v: i for i, v in enumerate(self.true_vertices)}

    @cached_property
    def _recovered_pairs(self) -> tuple[tuple[tuple[int, int], tuple[int, ...]], ...]:
        """Original edges as (endpoint pair in drawing ids, segment edge ids)."""
        pairs = []
        for e, (u, v) in enumerate(self.edges):
            if self.kinds[u] and self.kinds[v]:
                pairs.append(((u, v), (e,)))
        for x in self.false_vertices:
            rot = self.rotation[x]
            if len(rot) != 4:
                continue
            for a, b in ((rot[0], rot[2]), (rot[1], rot[3])):
                pairs.append(((self.other_end(a, x), self.other_end(b, x)), (a, b)))
        return tuple(pairs)

    def segment_map(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Recovered edge (drawing ids, normalized) -> drawing edge ids forming it."""
        return {norm_edge(*p): segs for p, segs in self._recovered_pairs}

    def _recovery_problems(self) -> list[str]:
        problems = []
        seen: set[tuple[int, int]] = set()
        for (u, v), segs in self._recovered_pairs:
            if u == v:
                problems.append(f"segments {list(segs)} close a loop at vertex {u}")
                continue
            if not (self.kinds[u] and self.kinds[v]):
                continue  # adjacent false vertices, reported separately
            e = norm_edge(u, v)
            if e in seen:
                problems.append(f"multiple edges between {u} and {v}")
            seen.add(e)
        return problems

    # -- validation --------------------------------------------------------

    @cached_property
    def report(self) -> ValidationReport:
        out: list[Violation] = []
        for x in self.false_vertices:
            if self.degree(x) != 4:
                out.append(Violation("false-degree",
                                     f"false vertex {x} has degree {self.degree(x)}, expected 4"))
        for e, (u, v) in enumerate(self.edges):
            if not self.kinds[u] and not self.kinds[v]:
                out.append(Violation("adjacent-false",
                                     f"adjacent false vertices {u} and {v} (edge {e})"))
        comp_of = {}
        for i, comp in enumerate(self.components()):
            for v in comp:
                comp_of[v] = i
        counts: dict[int, list[int]] = {}
        for v in range(self.n):
            counts.setdefault(comp_of[v], [0, 0, 0])[0] += 1
        for u, _ in self.edges:
            counts[comp_of[u]][1] += 1
        if self.edges:
            for f in self.traced_faces:
                counts[comp_of[f.vertices[0]]][2] += 1
        for c, (nv, ne, nf) in sorted(counts.items()):
            if ne and nv - ne + nf != 2:
                out.append(Violation("euler",
                                     f"component {c}: V - E + F = {nv} - {ne} + {nf} != 2"))
        for p in self._recovery_problems():
            out.append(Violation("non-simple",
                                 f"not a 1-plane drawing of a simple graph: {p}"))
        return ValidationReport(tuple(out))

    def require_valid(self) -> None:
        if not self.report.ok:
            msgs = "; ".join(v.message for v in self.report.violations)
            raise ValidationError(f"invalid drawing: {msgs}")


def validate(d: OnePlaneDrawing) -> ValidationReport:
    return d.report


def faces(d: OnePlaneDrawing) -> list[Face]:
    if not d.report.ok:
        raise PreconditionError("faces() requires a valid drawing")
    return list(d.traced_faces)


def recover_original(d: OnePlaneDrawing) -> Graph:
    """Undo the planarization: merge opposite segments at every false vertex."""
    d.require_valid()
    idx = d.true_index
    return Graph.from_edges(len(idx), ((idx[u], idx[v]) for (u, v), _ in d._recovered_pairs))


def crossing_minimality_audit(d: OnePlaneDrawing) -> list[Finding]:
    """Report local patterns that cannot occur in a crossing-minimal drawing.

    Findings are warnings.  Part ``b``: a false 3-face with a 2-vertex; part
    ``c``: a true 3-vertex with two 3-faces and two false neighbours but no
    5+-face; part ``d``: an edge from a true 3-vertex to a false vertex lying
    on two 3-faces.
    """
    if not d.report.ok:
        raise PreconditionError("audit requires a valid drawing")
    fs = d.traced_faces
    out: list[Finding] = []
    for f in fs:
        if f.degree == 3 and f.is_false:
            for v in f.vertices:
                if d.kinds[v] and d.degree(v) == 2:
                    out.append(Finding("b", f"false 3-face {f.index} is incident with 2-vertex {v}",
                                       (f.index, v)))
    for v in d.true_vertices:
        if d.degree(v) != 3:
            continue
        around = [fs[i].degree for i in d.incident_faces(v)]
        false_nbrs = sum(1 for w in d.neighbors(v) if not d.kinds[w])
        if around.count(3) >= 2 and false_nbrs >= 2 and max(around) < 5:
            out.append(Finding("c", f"3-vertex {v} has two 3-faces and two false neighbours "
                                    f"but no 5+-face", (v,)))
    for e, (a, b) in enumerate(d.edges):
        for u, x in ((a, b), (b, a)):
            if d.kinds[u] and d.degree(u) == 3 and not d.kinds[x]:
                if fs[d.dart_face[2 * e]].degree == 3 and fs[d.dart_face[2 * e + 1]].degree == 3:
                    out.append(Finding("d", f"edge {u}-{x} joins a 3-vertex to a false vertex "
                                            f"and lies on two 3-faces", (u, x)))
    return out
