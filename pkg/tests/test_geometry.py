import itertools
import json
from fractions import Fraction as Q

import pytest

from newton_spectra.geometry import compact_faces, is_simplicial, milnor_kouchnirenko, volumes
from newton_spectra.germ import NotConvenientError, parse_germ

from conftest import F1, F2, F3


def facet_sets(text):
    return {f.vertices for f in compact_faces(parse_germ(text)).facets}


def test_f3_facets():
    assert facet_sets(F3) == {
        ((0, 0, 8), (2, 2, 2), (8, 0, 0)),
        ((0, 8, 0), (2, 2, 2), (8, 0, 0)),
        ((0, 0, 8), (0, 8, 0), (2, 2, 2)),
    }


def test_f1_facets_and_covectors():
    L = compact_faces(parse_germ(F1))
    got = {f.vertices: f.covector for f in L.facets}
    assert got == {
        ((0, 12), (3, 6)): (Q(1, 6), Q(1, 12)),
        ((3, 6), (6, 4)): (Q(1, 12), Q(1, 8)),
        ((6, 4), (15, 0)): (Q(1, 15), Q(3, 20)),
    }


def test_quadric_single_edge():
    assert facet_sets("x^2+y^2") == {((0, 2), (2, 0))}


def test_f2_has_a_quadrilateral_facet():
    L = compact_faces(parse_germ(F2))
    sizes = sorted(len(f.vertices) for f in L.facets)
    assert sizes == [3, 4]
    quad = next(f for f in L.facets if len(f.vertices) == 4)
    assert quad.vertices == ((0, 2, 2), (0, 4, 0), (2, 0, 2), (4, 0, 0))
    assert quad.covector == (Q(1, 4), Q(1, 4), Q(1, 4))


def test_points_above_the_boundary_are_not_vertices():
    L = compact_faces(parse_germ("x^4+y^4+x^3*y^3+x^2*y^2"))
    assert (3, 3) not in L.vertices


def test_face_counts_and_dimensions():
    L = compact_faces(parse_germ(F3))
    assert [len(L.of_dim(d)) for d in range(3)] == [4, 6, 3]
    for f in L.faces:
        assert all(sum(c * x for c, x in zip(L.facets[0].covector, v)) >= 1 for v in f.vertices)


def test_lattice_intersection_closed():
    for text in (F1, F2, F3):
        L = compact_faces(parse_germ(text))
        sets = {frozenset(f.vertices) for f in L.faces}
        for a, b in itertools.combinations(sets, 2):
            c = a & b
            assert not c or c in sets


def test_zero_axes_flags():
    L = compact_faces(parse_germ(F3))
    edge = L.face(((0, 0, 8), (8, 0, 0)))
    assert edge is not None and edge.zero_axes == frozenset({1})
    assert not L.face(((2, 2, 2),)).zero_axes


def test_not_convenient_names_axis():
    with pytest.raises(NotConvenientError, match="not convenient: axis x"):
        compact_faces(parse_germ("x^2*y+y^2", ["x", "y"]))


def test_simpliciality():
    for text in (F1, F2, F3, "x^2+y^2", "x^5+y^3+x^2*y"):
        assert is_simplicial(compact_faces(parse_germ(text)))


def test_interior_point_on_boundary_is_not_a_vertex():
    # xyzw sits on the simplex spanned by the pure powers
    L = compact_faces(parse_germ("x^4+y^4+z^4+w^4+x*y*z*w"))
    assert L.face(((1, 1, 1, 1),)) is None
    assert len(L.facets) == 1


def test_volumes():
    assert volumes(parse_germ(F1)) == [27, 60]
    assert volumes(parse_germ("x^2+y^2")) == [4, 2]
    assert volumes(parse_germ("x^3+y^3+z^3")) == [9, Q(27, 2), Q(9, 2)]


@pytest.mark.parametrize("text, mu", [(F1, 94), (F2, 31), (F3, 215)])
def test_kouchnirenko_fixtures(text, mu):
    assert milnor_kouchnirenko(parse_germ(text)) == mu


@pytest.mark.parametrize("a,b,c", [(a, b, c) for a in range(2, 7) for b in range(2, 7) for c in range(2, 7) if a <= b <= c])
def test_kouchnirenko_brieskorn(a, b, c):
    assert milnor_kouchnirenko(parse_germ(f"x^{a}+y^{b}+z^{c}")) == (a - 1) * (b - 1) * (c - 1)


def test_json_export():
    L = compact_faces(parse_germ(F1))
    data = json.loads(L.to_json())
    assert data["n"] == 2 and len(data["faces"]) == 7
    assert {"1/6", "1/12"} <= {c for f in data["faces"] for c in f["covector"]}
    assert len(data["containment"]) == 6
