from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from oneplanar.drawing import recover_original
from oneplanar.errors import InputError, PreconditionError
from oneplanar.gen import GenSpec, gen_plane, named_drawing, named_graph
from oneplanar.graphcore import Graph, complete, complete_bipartite, cycle, star, wheel
from oneplanar.structure import (AlternatorWitness, DeficientSet, MasterAssignment, ScopeExceeded,
                                 alternator_oracle, build_master_assignment, canonical_signature,
                                 check_alternator, check_deficient, check_master, check_witness,
                                 classify, find_alternator, find_config_a, find_config_b,
                                 masters_chain, peel, structure_theorem_check, theorem_witness)


def random_graph(draw_edges, n):
    return Graph(n, frozenset(e for e in draw_edges if e[0] < e[1] < n))


graphs = st.integers(4, 10).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))).map(
        lambda s: Graph(n, frozenset((min(a, b), max(a, b)) for a, b in s if a != b))))


# -- classification ------------------------------------------------------------------

def test_k4_is_all_small():
    cls = classify(named_drawing("K4"))
    assert cls.letters == ("S",) * 4
    assert set(cls.signatures) == {"SSS"} and all(cls.burdened)


def test_wheel_hub_big_rim_small():
    d = named_drawing("W18")
    cls = classify(d)
    hub = max(range(d.n), key=d.degree)
    assert cls.is_big(hub)
    assert all(cls.is_small(v) for v in range(d.n) if v != hub)


def test_signature_canonical_form():
    assert canonical_signature("SBSF") == "FSBS"
    assert canonical_signature("BFBS") == "FBSB"
    assert canonical_signature("FBFS") == "FSFB"
    assert canonical_signature("SFB") == "FSB"


def test_fsbs_face_is_burdened_and_not_hungry(corpus_items):
    seen = 0
    for it in corpus_items[:60]:
        cls = classify(it.drawing)
        for f in it.drawing.traced_faces:
            if cls.signatures[f.index] == "FSBS":
                seen += 1
                assert cls.burdened[f.index]
                assert not any(h for (fi, _), h in cls.hungry.items() if fi == f.index)
    assert seen > 0


def test_hungry_means_two_big_neighbours(corpus_items):
    for it in corpus_items[:40]:
        d = it.drawing
        cls = classify(d)
        for (fi, pos), hungry in cls.hungry.items():
            a, b = d.traced_faces[fi].neighbors_at(pos)
            assert hungry == (d.degree(a) >= 9 and d.degree(b) >= 9)


# -- light edges ---------------------------------------------------------------------

def test_config_a_examples():
    w = find_config_a(complete(3))
    assert (w.u, w.v) == (0, 1) and w.degrees == (2, 2)
    assert find_config_a(star(20)) is None
    assert find_config_a(wheel(18)) is not None


def test_config_b_examples():
    w = find_config_b(complete(7))
    assert w is not None and w.degrees == (6, 6)
    assert find_config_b(complete(3)) is None
    hubs = [(0, 1)] + [(0, i) for i in range(2, 9)] + [(1, i) for i in range(9, 16)]
    w = find_config_b(Graph.from_edges(16, hubs))
    assert (w.u, w.v) == (0, 1) and w.degrees == (8, 8)


# -- alternators ---------------------------------------------------------------------

def test_k24_alternator():
    g = complete_bipartite(2, 4)
    for finder in (find_alternator, alternator_oracle):
        w = finder(g, 2, "alternator")
        assert w.X == (2, 3, 4, 5) and w.Y == (0, 1)
        assert check_alternator(g, w) == []


def test_no_alternator_without_low_vertices():
    g = complete(5)
    assert find_alternator(g, 2) is None and alternator_oracle(g, 2) is None


def test_subdivided_k9_has_no_2_alternator():
    g = named_graph("subdivided-K9")
    assert g.max_degree == 8
    assert find_alternator(g, 2) is None and alternator_oracle(g, 2) is None


def test_k_out_of_range():
    with pytest.raises(InputError):
        find_alternator(cycle(8), 2)
    with pytest.raises(InputError):
        alternator_oracle(cycle(8), 2)
    with pytest.raises(InputError):
        find_alternator(complete(9), 5)


def test_oracle_scope():
    g = star(25)
    g = Graph(g.n, g.edges | {(1, 2)})
    with pytest.raises(InputError):
        alternator_oracle(g, 2)


def test_scope_exceeded_is_distinct_from_none():
    # 24 low-degree vertices in adjacent pairs: the seed is empty and the
    # exhaustive fallback is over the cap
    edges = [(0, i) for i in range(1, 25)] + [(i, i + 1) for i in range(1, 25, 2)]
    g = Graph.from_edges(25, edges)
    with pytest.raises(ScopeExceeded):
        find_alternator(g, 2, cap=20)
    w = find_alternator(g, 2, cap=30)
    assert w is None or check_alternator(g, w) == []


def test_checker_rejects_tampered_witness():
    g = complete_bipartite(2, 4)
    w = find_alternator(g, 2)
    bad = AlternatorWitness(w.k, w.kind, w.X + (0,), w.Y, w.edges)
    assert check_alternator(g, bad)
    bad = AlternatorWitness(w.k, w.kind, w.X, w.Y, w.edges[1:])
    assert check_alternator(g, bad)


@settings(max_examples=60, deadline=None)
@given(graphs, st.sampled_from(["alternator", "alternating"]))
def test_peeling_keeps_every_feasible_subset(g, kind):
    if g.max_degree < 4:
        return
    k = 2
    low = [v for v in range(g.n) if 1 <= g.degrees[v] <= k]
    seed = [v for v in low if not any(g.has_edge(v, u) for u in low)]
    peeled = peel(g, seed, k, kind)
    delta = g.max_degree
    for r in range(1, len(seed) + 1):
        for sub in itertools.combinations(seed, r):
            nb = {}
            for x in sub:
                for y in g.adjacency[x]:
                    nb[y] = nb.get(y, 0) + 1
            need = (lambda y: g.degrees[y] + k - delta) if kind == "alternator" else (lambda y: k)
            if all(c >= need(y) for y, c in nb.items()):
                assert set(sub) <= peeled


@settings(max_examples=80, deadline=None)
@given(graphs, st.sampled_from(["alternator", "alternating"]))
def test_heuristic_agrees_with_oracle(g, kind):
    for k in range(2, g.max_degree // 2 + 1):
        a = find_alternator(g, k, kind)
        b = alternator_oracle(g, k, kind)
        assert (a is None) == (b is None)
        if a is not None:
            assert check_alternator(g, a) == []


# -- master assignments --------------------------------------------------------------

def test_master_examples():
    assert build_master_assignment(complete(5), 2) == MasterAssignment(2, {}, (), ())
    g = named_graph("subdivided-K9")
    m = build_master_assignment(g, 2)
    assert isinstance(m, MasterAssignment) and len(m.pairs) == 1
    w = m.X[0]
    assert g.degrees[w] == 2 and g.has_edge(w, m.pairs[w])
    assert m.loads() == {m.pairs[w]: 1}
    cert = build_master_assignment(complete_bipartite(2, 4), 2)
    assert isinstance(cert, DeficientSet)
    assert len(cert.S) == 4 and cert.capacity == 2
    assert check_deficient(complete_bipartite(2, 4), cert) == []


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_assignment_xor_certificate(g):
    for k in range(2, g.max_degree // 2 + 1):
        r = build_master_assignment(g, k)
        if isinstance(r, MasterAssignment):
            assert check_master(g, r) == []
        else:
            assert check_deficient(g, r) == []


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_infeasible_masters_imply_alternating_structure(g):
    for k in range(2, g.max_degree // 2 + 1):
        if isinstance(build_master_assignment(g, k), DeficientSet):
            assert alternator_oracle(g, k, "alternating") is not None


def test_masters_chain_on_w18():
    g = recover_original(named_drawing("W18"))
    chain = masters_chain(g)
    assert chain.masters[2].pairs == {}
    for k in (3, 4, 5):
        # the rim (degree 3) with the hub forms an alternator, so M_k is not attempted
        assert k in chain.blocking and k not in chain.masters
        assert check_alternator(g, chain.blocking[k]) == []
        assert alternator_oracle(g, k) is not None
    assert chain.load_violations() == []


def test_masters_chain_blocks_at_two():
    g = Graph.from_edges(12, [(0, i) for i in range(2, 12)] + [(1, i) for i in range(2, 12)])
    chain = masters_chain(g)
    assert 2 in chain.blocking and 2 not in chain.masters


def test_masters_chain_needs_delta_ten():
    with pytest.raises(InputError):
        masters_chain(named_graph("subdivided-K9"))


def test_masters_chain_fact_two():
    # hub-and-spoke with pendant triangles: every k has an assignment
    edges = [(0, i) for i in range(1, 13)] + [(i, i + 1) for i in range(1, 12, 2)]
    g = Graph.from_edges(13, edges)
    chain = masters_chain(g, "alternating")
    assert chain.load_violations() == []
    for k, m in chain.masters.items():
        assert check_master(g, m) == []


# -- theorem driver ------------------------------------------------------------------

def test_theorem_examples():
    w = structure_theorem_check(named_drawing("K3"))
    assert w.type == "config_a"
    w = theorem_witness(named_graph("K7"))
    assert w.type in ("config_a", "config_b") and check_witness(named_graph("K7"), w) == []
    w = structure_theorem_check(named_drawing("crossed-cube"))
    assert w.type == "config_b"


def test_theorem_precondition():
    with pytest.raises(PreconditionError):
        structure_theorem_check(gen_plane(GenSpec("star", 21)))
    w = structure_theorem_check(named_drawing("K2,18"))
    assert w.type == "alternator" and w.k == 2 and len(w.X) == 18


def test_witness_json_round_trip():
    w = find_alternator(complete_bipartite(2, 4), 2)
    doc = json.loads(json.dumps(w.to_dict()))
    assert doc["type"] == "alternator" and doc["X"] == [2, 3, 4, 5]
    assert len(doc["edges"]) == 8
