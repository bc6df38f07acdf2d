from __future__ import annotations

import pytest

from oneplanar.drawing import (OnePlaneDrawing, crossing_minimality_audit, faces, recover_original,
                               validate)
from oneplanar.errors import DrawingError, PreconditionError, ValidationError
from oneplanar.gen import NAMED_DRAWINGS, named_drawing
from oneplanar.graphcore import complete, cycle


def _quad_with_outer_chord() -> OnePlaneDrawing:
    """Crossed quadrilateral plus a second copy of the diagonal 0-2 drawn outside."""
    q = named_drawing("quad-crossing")
    rot = [list(r) for r in q.rotation]
    rot[0].insert(0, 8)
    rot[2].insert(0, 8)
    return OnePlaneDrawing.build(q.kinds, list(q.edges) + [(0, 2)], rot)


def test_plane_k4_faces():
    d = named_drawing("K4")
    fs = faces(d)
    assert len(fs) == 4 and all(f.degree == 3 for f in fs)
    assert validate(d).ok
    assert recover_original(d).edges == complete(4).edges


def test_c5_has_two_five_faces():
    fs = faces(named_drawing("C5"))
    assert sorted(f.degree for f in fs) == [5, 5]


def test_single_crossing_recovers_k4():
    d = named_drawing("quad-crossing")
    assert len(d.false_vertices) == 1
    assert recover_original(d).edges == complete(4).edges
    assert sum(f.is_false for f in faces(d)) == 4


@pytest.mark.parametrize("name", NAMED_DRAWINGS)
def test_named_fixtures_validate(name):
    d = named_drawing(name)
    assert validate(d).ok, validate(d).violations
    # Euler per component on the planarization
    assert d.n - d.m + len(d.traced_faces) == 2


def test_k6_fixture():
    d = named_drawing("K6")
    assert len(d.false_vertices) == 3
    assert recover_original(d).edges == complete(6).edges


def test_face_incidences_cover_every_dart_once():
    d = named_drawing("crossed-cube")
    darts = [x for f in faces(d) for x in f.darts]
    assert sorted(darts) == list(range(2 * d.m))
    assert sum(f.degree for f in faces(d)) == 2 * d.m


def test_false_vertex_of_degree_three():
    d = OnePlaneDrawing.build([False, True, True, True], [(0, 1), (0, 2), (0, 3)],
                              [(0, 1, 2), (0,), (1,), (2,)])
    assert validate(d).codes() == {"false-degree"}


def test_adjacent_false_vertices():
    d = OnePlaneDrawing.build([True, False, False, True], [(0, 1), (1, 2), (2, 3)],
                              [(0,), (0, 1), (1, 2), (2,)])
    assert "adjacent-false" in validate(d).codes()


def test_non_planar_rotation_breaks_euler():
    k4 = named_drawing("K4")
    rot = list(k4.rotation)
    rot[0] = tuple(reversed(rot[0]))
    assert validate(OnePlaneDrawing.build(k4.kinds, k4.edges, rot)).codes() == {"euler"}


def test_duplicate_recovered_edge_is_non_simple():
    d = _quad_with_outer_chord()
    assert validate(d).codes() == {"non-simple"}
    with pytest.raises(ValidationError):
        recover_original(d)
    with pytest.raises(PreconditionError):
        faces(d)


def test_crossing_segments_closing_a_loop():
    d = OnePlaneDrawing.build([False, True, True], [(0, 1), (0, 2), (0, 1), (0, 2)],
                              [(0, 1, 2, 3), (0, 2), (1, 3)])
    assert "non-simple" in validate(d).codes()


@pytest.mark.parametrize("kinds,edges,rot", [
    ([True, True], [(0, 0)], [(0,), ()]),
    ([True, True], [(0, 1)], [(0, 0), (0,)]),
    ([True, True], [(0, 1)], [(), (0,)]),
    ([True], [(0, 1)], [(0,)]),
])
def test_structurally_broken_rotations(kinds, edges, rot):
    with pytest.raises(DrawingError):
        OnePlaneDrawing.build(kinds, edges, rot)


def test_audit_flags_degree_three_vertex_on_two_triangles():
    found = crossing_minimality_audit(named_drawing("quad-crossing"))
    assert {f.part for f in found} == {"d"}
    assert crossing_minimality_audit(named_drawing("K6")) == []


def test_audit_needs_valid_drawing():
    with pytest.raises(PreconditionError):
        crossing_minimality_audit(_quad_with_outer_chord())


def test_isolated_vertex_and_empty_drawing():
    d = OnePlaneDrawing.build([True], [], [()])
    assert validate(d).ok and len(faces(d)) == 1
    assert recover_original(d).n == 1
    assert recover_original(named_drawing("C5")).edges == cycle(5).edges
