"""JSON documents for graphs, drawings and results; DOT export."""

from __future__ import annotations

import json
from typing import Any

from .drawing import OnePlaneDrawing, recover_original
from .errors import FormatError
from .graphcore import Edge, Graph, norm_edge

DRAWING_VERSION = "oneplanar-drawing/1"


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _int(x: Any, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{where}: expected an integer, got {x!r}")
    return x


def _field(obj: Any, key: str, kind: type, where: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, kind):
        raise FormatError(f"{where}.{key}: expected {kind.__name__}")
    return val


# -- drawings ----------------------------------------------------------------------

def drawing_to_doc(d: OnePlaneDrawing) -> dict:
    return {
        "version": DRAWING_VERSION,
        "vertices": [{"id": v, "kind": "true" if d.kinds[v] else "false"} for v in range(d.n)],
        "edges": [{"id": e, "u": u, "v": v} for e, (u, v) in enumerate(d.edges)],
        "rotation": {str(v): list(d.rotation[v]) for v in range(d.n)},
    }


def serialize_drawing(d: OnePlaneDrawing) -> str:
    return dumps(drawing_to_doc(d))


def drawing_from_doc(doc: Any) -> OnePlaneDrawing:
    if not isinstance(doc, dict):
        raise FormatError("drawing document must be a JSON object")
    version = doc.get("version")
    if version != DRAWING_VERSION:
        raise FormatError(f"version: unknown drawing version {version!r}")
    verts = _field(doc, "vertices", list, "document")
    kinds: dict[int, bool] = {}
    for i, item in enumerate(verts):
        where = f"vertices[{i}]"
        vid = _int(_field(item, "id", int, where), f"{where}.id")
        kind = _field(item, "kind", str, where)
        if kind not in ("true", "false"):
            raise FormatError(f"{where}.kind: expected 'true' or 'false', got {kind!r}")
        if vid in kinds:
            raise FormatError(f"{where}.id: duplicate vertex id {vid}")
        kinds[vid] = kind == "true"
    n = len(kinds)
    if set(kinds) != set(range(n)):
        raise FormatError(f"vertices: ids must be exactly 0..{n - 1}")
    edges: dict[int, tuple[int, int]] = {}
    for i, item in enumerate(_field(doc, "edges", list, "document")):
        where = f"edges[{i}]"
        eid = _int(_field(item, "id", int, where), f"{where}.id")
        u = _int(_field(item, "u", int, where), f"{where}.u")
        v = _int(_field(item, "v", int, where), f"{where}.v")
        if eid in edges:
            raise FormatError(f"{where}.id: duplicate edge id {eid}")
        for name, x in (("u", u), ("v", v)):
            if x not in kinds:
                raise FormatError(f"{where}.{name}: unknown vertex {x}")
        edges[eid] = (u, v)
    m = len(edges)
    if set(edges) != set(range(m)):
        raise FormatError(f"edges: ids must be exactly 0..{m - 1}")
    degree = [0] * n
    for u, v in edges.values():
        degree[u] += 1
        degree[v] += 1
    rot_doc = _field(doc, "rotation", dict, "document")
    rotation: list[tuple[int, ...]] = []
    for v in range(n):
        where = f"rotation[{str(v)!r}]"
        if str(v) not in rot_doc:
            raise FormatError(f"{where}: missing")
        lst = rot_doc[str(v)]
        if not isinstance(lst, list):
            raise FormatError(f"{where}: expected a list of edge ids")
        ids = [_int(x, f"{where}[{j}]") for j, x in enumerate(lst)]
        for j, e in enumerate(ids):
            if e not in edges:
                raise FormatError(f"{where}[{j}]: dangling edge id {e}")
            if v not in edges[e]:
                raise FormatError(f"{where}[{j}]: edge {e} is not incident with vertex {v}")
        if len(set(ids)) != len(ids):
            raise FormatError(f"{where}: an edge id is listed twice")
        if len(ids) != degree[v]:
            raise FormatError(f"{where}: length {len(ids)} differs from degree {degree[v]}")
        rotation.append(tuple(ids))
    extra = set(rot_doc) - {str(v) for v in range(n)}
    if extra:
        raise FormatError(f"rotation: unknown vertex keys {sorted(extra)}")
    return OnePlaneDrawing.build([kinds[v] for v in range(n)], [edges[e] for e in range(m)], rotation)


def parse_drawing(text: str) -> OnePlaneDrawing:
    return drawing_from_doc(_load(text))


def canonical_drawing(text: str) -> str:
    return serialize_drawing(parse_drawing(text))


def export_dot(d: OnePlaneDrawing) -> str:
    """Undirected DOT; crossing vertices are small unlabelled squares."""
    d.require_valid()
    lines = ["graph drawing {"]
    for v in range(d.n):
        if d.kinds[v]:
            lines.append(f'  v{v} [shape=circle, label="{v}"];')
        else:
            lines.append(f'  v{v} [shape=square, label="", width=0.15];')
    for u, v in d.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- graphs ----------------------------------------------------------------------

def graph_to_doc(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges]}


def serialize_graph(g: Graph) -> str:
    return dumps(graph_to_doc(g))


def graph_from_doc(doc: Any) -> Graph:
    if not isinstance(doc, dict):
        raise FormatError("graph document must be a JSON object")
    n = _int(_field(doc, "n", int, "document"), "n")
    edges = []
    for i, e in enumerate(_field(doc, "edges", list, "document")):
        if not isinstance(e, list) or len(e) != 2:
            raise FormatError(f"edges[{i}]: expected [u, v]")
        edges.append((_int(e[0], f"edges[{i}][0]"), _int(e[1], f"edges[{i}][1]")))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(f"edges: {exc}") from None


def parse_graph(text: str) -> Graph:
    return graph_from_doc(_load(text))


def load_graph_or_drawing(text: str) -> tuple[Graph, OnePlaneDrawing | None]:
    """Accept either document type; drawings are reduced to their original graph."""
    doc = _load(text)
    if isinstance(doc, dict) and "version" in doc:
        d = drawing_from_doc(doc)
        d.require_valid()
        return recover_original(d), d
    return graph_from_doc(doc), None


# -- colour lists ------------------------------------------------------------------

def parse_lists(text: str) -> tuple[dict[int, set[int]], dict[Edge, set[int]]]:
    """``{"vertices": [[v, [c, ...]], ...], "edges": [[u, v, [c, ...]], ...]}``."""
    doc = _load(text)
    if not isinstance(doc, dict):
        raise FormatError("list document must be a JSON object")
    vl: dict[int, set[int]] = {}
    el: dict[Edge, set[int]] = {}
    for i, item in enumerate(doc.get("vertices", [])):
        if not isinstance(item, list) or len(item) != 2 or not isinstance(item[1], list):
            raise FormatError(f"vertices[{i}]: expected [v, [colours]]")
        vl[_int(item[0], f"vertices[{i}][0]")] = {_int(c, f"vertices[{i}][1]") for c in item[1]}
    for i, item in enumerate(doc.get("edges", [])):
        if not isinstance(item, list) or len(item) != 3 or not isinstance(item[2], list):
            raise FormatError(f"edges[{i}]: expected [u, v, [colours]]")
        e = norm_edge(_int(item[0], f"edges[{i}][0]"), _int(item[1], f"edges[{i}][1]"))
        el[e] = {_int(c, f"edges[{i}][2]") for c in item[2]}
    return vl, el


def lists_to_doc(vertex_lists: dict[int, set[int]], edge_lists: dict[Edge, set[int]]) -> dict:
    return {"vertices": [[v, sorted(c)] for v, c in sorted(vertex_lists.items())],
            "edges": [[u, v, sorted(c)] for (u, v), c in sorted(edge_lists.items())]}
