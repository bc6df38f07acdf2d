from __future__ import annotations

import json
from fractions import Fraction

import pytest

from oneplanar.discharge import (RULES, TOTAL, fkey, frac_str, init_charges, negative_elements,
                                 r2_sent, run_discharge, verify_claims, vkey)
from oneplanar.drawing import OnePlaneDrawing
from oneplanar.errors import InputError, PreconditionError
from oneplanar.gen import GenSpec, gen_plane, named_drawing
from oneplanar.structure import classify

F = Fraction


def test_k4_initial_charges():
    led = init_charges(named_drawing("K4"))
    assert [led.charge[vkey(v)] for v in range(4)] == [-3] * 4
    assert [led.charge[fkey(f)] for f in range(4)] == [0] * 4
    assert led.total() == -12


def test_c5_initial_charges():
    led = init_charges(named_drawing("C5"))
    assert [led.charge[vkey(v)] for v in range(5)] == [-4] * 5
    assert sorted(led.charge[fkey(f)] for f in range(2)) == [4, 4]
    assert [c for _, c in negative_elements(led)] == [-4] * 5


def test_c5_faces_split_remainder():
    led = run_discharge(named_drawing("C5"))
    assert all(t.rule == "R5" and t.amount == F(4, 5) for t in led.log)
    assert [c for _, c in negative_elements(led)] == [F(-12, 5)] * 5
    assert led.total() == -12


def test_k6_total():
    assert init_charges(named_drawing("K6")).total() == -12


def test_k4_has_no_transfers():
    d = named_drawing("K4")
    led = run_discharge(d)
    assert led.log == [] and led.charge == led.initial
    assert led.partial
    assert [n for n, _ in negative_elements(led)] == ["v0", "v1", "v2", "v3"]


def test_disconnected_drawing_rejected():
    d = OnePlaneDrawing.build([True] * 4, [(0, 1), (2, 3)], [(0,), (0,), (1,), (1,)])
    with pytest.raises(PreconditionError):
        init_charges(d)


def test_rule_table_amounts():
    assert RULES.big_to_face == F(1, 3)
    assert (RULES.hungry_false, RULES.plain_false) == (F(4, 3), F(2, 3))
    assert [RULES.master_amount(k) for k in (2, 3, 4, 5)] == [F(2, 3), F(1, 2), F(1, 2), F(2, 3)]
    assert [RULES.master_rule(d) for d in (2, 3, 4, 5)] == ["R6", "R7", "R8", "R9"]
    assert [r.id for r in RULES.rules] == [f"R{i}" for i in range(1, 10)]


def test_big_vertex_sends_per_incidence():
    d = gen_plane(GenSpec("star", 11))
    led = run_discharge(d)
    r1 = [t for t in led.log if t.rule == "R1"]
    assert len(r1) == 10 and sum(t.amount for t in r1) == F(10, 3)


def test_phase_totals_are_exact(corpus_items):
    for it in corpus_items[:50]:
        led = run_discharge(it.drawing)
        assert [p for p, _ in led.phase_totals] == ["init", "R1", "R2", "R3-R5", "R6-R9"]
        assert all(t == TOTAL for _, t in led.phase_totals)
        assert all(t.amount > 0 for t in led.log)


def _faces_with(d, sig):
    cls = classify(d)
    return [f for f in d.traced_faces if cls.signatures[f.index] == sig]


def test_closed_form_amounts(corpus_items):
    expected = {"FBB": [F(2, 3)], "FSB": [F(1, 3)], "FSFS": [F(1, 3)] * 2,
                "FSBS": [F(5, 6)] * 2, "FSFB": [F(1)]}
    seen = {s: 0 for s in expected}
    for it in corpus_items:
        d = it.drawing
        led = run_discharge(d)
        for sig, want in expected.items():
            for f in _faces_with(d, sig):
                sent = [t.amount for t in led.sent_by(fkey(f.index), ("R3", "R4", "R5"))]
                assert sent == want, (it.index, sig, sent)
                seen[sig] += 1
    assert all(seen.values()), seen


def test_r2_sends_four_thirds_per_hungry_incidence(corpus_items):
    for it in corpus_items[:60]:
        d = it.drawing
        cls = classify(d)
        led = run_discharge(d)
        for f in d.traced_faces:
            if f.degree < 4:
                continue
            h = sum(1 for (fi, _), hungry in cls.hungry.items() if fi == f.index and hungry)
            m = sum(1 for (fi, _), hungry in cls.hungry.items() if fi == f.index and not hungry)
            assert r2_sent(led, f.index) == F(4, 3) * h + F(2, 3) * m


def test_masters_feed_their_clients(corpus_items):
    complete_runs = [it for it in corpus_items if not run_discharge(it.drawing).partial]
    assert complete_runs
    for it in complete_runs:
        led = run_discharge(it.drawing)
        for t in led.log:
            if t.rule in ("R6", "R7", "R8", "R9"):
                assert t.amount == RULES.master_amount(t.k)
                client = int(t.target[1:])
                assert RULES.master_rule(it.drawing.degree(client)) == t.rule


def test_claims_on_fixtures():
    for name in ("K4", "C5", "W18", "W20", "K6", "octahedron", "crossed-cube"):
        d = named_drawing(name)
        assert verify_claims(d, run_discharge(d)).ok


def test_claims_reject_foreign_ledger():
    with pytest.raises(InputError):
        verify_claims(named_drawing("K6"), run_discharge(named_drawing("C5")))


def test_ledger_json():
    led = run_discharge(named_drawing("C5"))
    doc = json.loads(json.dumps(led.to_dict()))
    assert doc["elements"]["v0"] == {"initial": "-4/1", "final": "-12/5"}
    assert doc["log"][0]["amount"] == "4/5"
    assert frac_str(F(-2, 6)) == "-1/3"
