import itertools
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from newton_spectra.geometry import GeometryError, compact_faces
from newton_spectra.germ import parse_germ
from newton_spectra.subdivision import locate_and_evaluate, triangulate, triangulate_face, weight_function

from conftest import F1, F2, F3, geometry


def test_simplex_facets_pass_through():
    for text in (F1, F3):
        g, L, S, W = geometry(text)
        assert len(S) == 3
        assert {s.vertices for s in S} == {f.vertices for f in L.facets}


def test_pulling_triangulation_of_quadrilateral():
    g = parse_germ("x^4+y^4+y*z^3+x*z^3+z^5")
    L = compact_faces(g)
    quad = next(f for f in L.facets if len(f.vertices) == 4)
    assert set(triangulate_face(L, quad)) == {
        ((0, 1, 3), (0, 4, 0), (4, 0, 0)),
        ((0, 1, 3), (1, 0, 3), (4, 0, 0)),
    }


def test_f2_subdivision():
    g, L, S, W = geometry(F2)
    assert len(S) == 3
    assert sorted(map(tuple, W.covectors)) == [
        (Q(1, 4),) * 3,
        (Q(1, 4),) * 3,
        (Q(3, 8), Q(3, 8), Q(1, 8)),
    ]


def test_f1_covectors_and_M():
    g, L, S, W = geometry(F1)
    got = {s.vertices: tuple(W.covectors[s.id]) for s in S}
    assert got[((0, 12), (3, 6))] == (Q(1, 6), Q(1, 12))
    assert got[((3, 6), (6, 4))] == (Q(1, 12), Q(1, 8))
    assert got[((6, 4), (15, 0))] == (Q(1, 15), Q(3, 20))
    assert W.M == 120


def test_quadric_weights():
    g, L, S, W = geometry("x^2+y^2")
    assert W.covectors == [(Q(1, 2), Q(1, 2))] and W.M == 2
    assert locate_and_evaluate(W, S, (1, 1))[1] == 1


@pytest.mark.parametrize("alpha, h", [((2, 1), Q(1, 2)), ((0, 1), Q(1, 3))])
def test_f1_evaluation(alpha, h):
    g, L, S, W = geometry(F1)
    point = tuple(a + 1 for a in alpha)
    assert locate_and_evaluate(W, S, point)[1] == h


def test_vertices_have_h_one():
    for text in (F1, F2, F3):
        g, L, S, W = geometry(text)
        for v in L.vertices:
            assert locate_and_evaluate(W, S, v)[1] == 1


def test_support_above_boundary_has_h_above_one():
    g, L, S, W = geometry("x^4+y^4+x^3*y^3")
    assert locate_and_evaluate(W, S, (3, 3))[1] > 1


def test_point_outside_every_cone():
    g, L, S, W = geometry(F1)
    with pytest.raises(GeometryError):
        locate_and_evaluate(W, S, (-1, 2))


@pytest.mark.parametrize("text", [F1, F2, F3])
def test_continuity_and_integrality_up_to_level_three(text):
    g, L, S, W = geometry(text)
    bound = [3 * max(v[i] for v in L.vertices) for i in range(g.n)]
    for p in itertools.product(*(range(b + 1) for b in bound)):
        if not any(p):
            continue
        h = L.newton_function(p)
        if h > 3:
            continue
        owner, value = locate_and_evaluate(W, S, p)  # raises on disagreement
        assert value == h
        assert (W.M * value).denominator == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([F1, F2, F3]), st.data())
def test_homogeneity(text, data):
    g, L, S, W = geometry(text)
    p = tuple(data.draw(st.integers(0, 9)) for _ in range(g.n))
    k = data.draw(st.integers(0, 4))
    if not any(p):
        return
    _, h = locate_and_evaluate(W, S, p)
    kp = tuple(k * x for x in p)
    if k:
        assert locate_and_evaluate(W, S, kp)[1] == k * h
