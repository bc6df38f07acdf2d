from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from oneplanar.coloring import (EdgeColoring, TotalLabelling, edge_color_k, equitable_edge_color,
                                equitable_threshold, exact_chromatic_index, lambda_pT,
                                list_edge_color, list_total_color, p1_total_label,
                                reduction_graph_order, reduction_order, split_graph,
                                total_chromatic_number, uniform_lists, verify_edge_coloring,
                                verify_equitable, verify_total_coloring, verify_total_labelling,
                                vizing_edge_color)
from oneplanar.coloring.verify import balance_profile
from oneplanar.errors import InputError
from oneplanar.gen import GenSpec, gen_plane, named_drawing, named_graph
from oneplanar.graphcore import Graph, complete, complete_bipartite, cycle, path, star, wheel
from oneplanar.structure import check_witness

import oracles

graphs = st.integers(2, 9).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=18).map(
        lambda s: Graph(n, frozenset((min(a, b), max(a, b)) for a, b in s if a != b))))

C5 = cycle(5)
C5_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]


# -- verifiers ------------------------------------------------------------------------

def test_verify_c5_examples():
    ok = dict(zip(C5_EDGES, [1, 2, 1, 2, 3]))
    assert verify_edge_coloring(C5, EdgeColoring(ok, 3)) == []
    bad = dict(zip(C5_EDGES, [1, 1, 2, 1, 2]))
    assert any("vertex 1" in p for p in verify_edge_coloring(C5, bad))


def test_verify_lists():
    k3 = complete(3)
    lists = {(0, 1): {1, 2}, (1, 2): {2, 3}, (0, 2): {1, 3}}
    phi = {(0, 1): 1, (1, 2): 2, (0, 2): 3}
    assert verify_edge_coloring(k3, phi, lists) == []
    assert verify_edge_coloring(k3, {**phi, (0, 2): 2}, lists)


def test_verify_total_labelling_rules():
    g = path(2)
    good = TotalLabelling({0: 0, 1: 3}, {(0, 1): 1}, 1, 3)
    assert verify_total_labelling(g, good) == []
    near = TotalLabelling({0: 0, 1: 3}, {(0, 1): 1}, 2, 3)
    assert any("closer than 2" in p for p in verify_total_labelling(g, near))


# -- proper edge colouring ------------------------------------------------------------

def test_vizing_examples():
    assert vizing_edge_color(C5).used() == 3
    assert vizing_edge_color(complete_bipartite(2, 4)).used() == 4
    assert vizing_edge_color(named_graph("petersen")).used() <= 4


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_vizing_is_proper(g):
    c = vizing_edge_color(g)
    assert verify_edge_coloring(g, c) == []
    assert c.used() <= g.max_degree + 1


def test_exact_index_examples():
    assert exact_chromatic_index(C5).value == 3
    assert exact_chromatic_index(cycle(6)).value == 2
    r = exact_chromatic_index(named_graph("petersen"))
    assert r.value == 4 and verify_edge_coloring(named_graph("petersen"), r.solution) == []


def test_exact_index_matches_enumeration_up_to_eight_edges():
    count = 0
    for g in oracles.atlas_graphs(7):
        if g.m > 8:
            continue
        count += 1
        assert exact_chromatic_index(g).value == oracles.chromatic_index(g)
    assert count > 300


def test_exact_index_timeout_is_explicit():
    r = edge_color_k(complete(7), 6, timeout=0.0)
    assert r.status == "timeout" and r.solution is None
    assert exact_chromatic_index(complete(7), timeout=0.0).status == "timeout"


# -- list edge colouring --------------------------------------------------------------

def test_two_lists_on_odd_cycle_fail():
    assert list_edge_color(C5, {e: {1, 2} for e in C5.sorted_edges}).status == "none"


@settings(max_examples=60, deadline=None)
@given(graphs, st.integers(0, 2**32))
def test_large_lists_always_succeed(g, seed):
    import random
    rnd = random.Random(seed)
    size = max(1, 2 * g.max_degree - 1)
    lists = {e: set(rnd.sample(range(1, 3 * size + 1), size)) for e in g.sorted_edges}
    r = list_edge_color(g, lists)
    assert r.found and verify_edge_coloring(g, r.solution, lists) == []


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_uniform_lists_match_exact_colourability(g):
    for k in (g.max_degree, g.max_degree + 1):
        if k == 0:
            continue
        assert list_edge_color(g, uniform_lists(g, k)).found == oracles.edge_colourable(g, k)


def test_empty_list_rejected():
    with pytest.raises(ValueError):
        list_edge_color(path(2), {(0, 1): set()})


# -- total colouring and labelling ------------------------------------------------------

def test_total_examples():
    k3 = complete(3)
    full = {1, 2, 3}
    r = list_total_color(k3, {v: full for v in range(3)}, {e: full for e in k3.sorted_edges})
    assert r.found and verify_total_coloring(k3, r.solution) == []
    for (u, v), c in r.solution.edge.items():
        assert c == r.solution.vertex[3 - u - v]
    r = list_total_color(path(2), {0: {1}, 1: {1}}, {(0, 1): {1, 2, 3}})
    assert r.status == "none"
    s = star(3)
    four = set(range(1, 5))
    r = list_total_color(s, {v: four for v in range(4)}, {e: four for e in s.sorted_edges})
    assert r.found
    assert total_chromatic_number(s).value == 4 == oracles.total_chromatic_number(s)


def test_lambda_examples():
    assert lambda_pT(complete(3), 1).value == 2
    assert lambda_pT(complete(3), 2).value == oracles.lambda_total(complete(3), 2)
    assert lambda_pT(Graph(4, frozenset()), 3).value == 0


def test_single_edge_with_p_two():
    # u, v and uv need pairwise gaps 1, 2, 2: spans 0..2 cannot host them, 0..3 can
    g = path(2)
    assert p1_total_label(g, 2, 2).status == "none"
    r = p1_total_label(g, 2, 3)
    assert r.found and verify_total_labelling(g, r.solution) == []
    assert lambda_pT(g, 2).value == 3 == oracles.lambda_total(g, 2)


@settings(max_examples=40, deadline=None)
@given(graphs.filter(lambda g: g.n <= 6 and g.m <= 9))
def test_p1_window_around_total_chromatic_number(g):
    chi2 = oracles.total_chromatic_number(g)
    assert p1_total_label(g, 1, chi2 - 1).found
    if chi2 >= 2:
        assert p1_total_label(g, 1, chi2 - 2).status == "none"


@settings(max_examples=40, deadline=None)
@given(graphs.filter(lambda g: g.m > 0 and g.n <= 6), st.integers(1, 3))
def test_lambda_lower_bound(g, p):
    r = lambda_pT(g, p)
    assert r.value >= g.max_degree + p - 1
    assert verify_total_labelling(g, r.solution) == []


# -- equitable ------------------------------------------------------------------------

def test_one_colour_is_always_equitable():
    for g in (C5, complete(6), wheel(9), Graph(3, frozenset())):
        r = equitable_edge_color(g, 1)
        assert r.found and verify_equitable(g, r.solution.colors, 1) == []


def test_odd_cycle_threshold():
    assert equitable_edge_color(C5, 2).status == "none"
    r = equitable_edge_color(C5, 3)
    assert r.found and verify_equitable(C5, r.solution.colors, 3) == []
    t = equitable_threshold(C5, 10)
    assert t.value == 3 and t.exact


def test_threshold_examples():
    assert equitable_threshold(cycle(6), 10).value == 1
    k3 = complete(3)
    want = min(k for k in range(1, 8) if all(oracles.equitable_exists(k3, j) for j in range(k, 8)))
    assert equitable_threshold(k3, 7).value == want == 3


def test_k4_two_colours():
    g = complete(4)
    r = equitable_edge_color(g, 2)
    assert r.found
    assert all(sorted(c) == [1, 2] for c in balance_profile(g, r.solution.colors, 2))


def test_equitable_bad_k():
    with pytest.raises(InputError):
        equitable_edge_color(C5, 0)


@settings(max_examples=60, deadline=None)
@given(graphs.filter(lambda g: g.m <= 7), st.integers(2, 4))
def test_equitable_matches_enumeration(g, k):
    r = equitable_edge_color(g, k)
    assert r.found == oracles.equitable_exists(g, k)
    if r.found:
        assert verify_equitable(g, r.solution.colors, k) == []


def test_split_graph_preserves_edges():
    g = wheel(20)
    h, owner, back = split_graph(g, 7)
    assert h.max_degree <= 7 and h.m == g.m
    assert sorted(back.values()) == sorted(g.sorted_edges)
    assert owner.count(0) == 3


# -- reduction order ------------------------------------------------------------------

def test_reduction_examples():
    steps = reduction_order(named_drawing("K3"))
    assert len(steps) == 3 and all(s.witness.type == "config_a" for s in steps)
    assert reduction_order(gen_plane(GenSpec("star", 2))) == []


def test_k7_reduction_witnesses_verify():
    g = named_graph("K7")
    steps = reduction_graph_order(g)
    assert steps[0].witness.type == "config_b"
    removed = set()
    for s in steps:
        h = Graph(g.n, g.edges - removed)
        assert check_witness(h, s.witness) == []
        removed |= set(s.removed)
    assert removed == set(g.edges)
