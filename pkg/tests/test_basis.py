from collections import Counter

import pytest

from newton_spectra import compact_faces, parse_germ, triangulate, weight_function
from newton_spectra.basis import SimplicialityError, basis_monomials, build_basis
from newton_spectra.subdivision import locate_and_evaluate

from conftest import fixture_result, geometry, pipeline

MU = {"f1": 94, "f2": 31, "f3": 215}


def test_size_and_distinct_points(fixture_name):
    r = fixture_result(fixture_name)
    assert len(r.basis) == MU[fixture_name] == r.milnor
    assert len({e.point for e in r.basis}) == len(r.basis)


def test_points_in_open_orthant(fixture_name):
    r = fixture_result(fixture_name)
    assert all(min(e.point) >= 1 for e in r.basis)


def test_stored_levels_reevaluate(fixture_name):
    r = fixture_result(fixture_name)
    for e in r.basis:
        owner, h = locate_and_evaluate(r.weights, r.subdivision, e.point)
        assert h == e.h == r.lattice.newton_function(e.point)
        assert e.spectral_number == e.h - 1


def test_placement_data_is_consistent(fixture_name):
    r = fixture_result(fixture_name)
    for e in r.basis:
        assert 0 <= e.position < e.string_length
        assert e.skeleton_dim == e.face_dim + 1
        assert e.copy.index == e.position + 1


def test_fallback_used_only_without_seeds():
    # f1 and f3 have simplex facets only
    for name in ("f1", "f3"):
        assert not any(e.copy.fallback for e in fixture_result(name).basis)


def test_quadric():
    r = pipeline("x^2+y^2")
    assert [e.point for e in r.basis] == [(1, 1)]
    assert basis_monomials(r.basis, r.germ.variables) == ["1"]


def test_listing_order():
    r = pipeline("x^3+y^3")
    assert basis_monomials(r.basis, r.germ.variables) == ["xy", "y", "x", "1"]
    assert basis_monomials(r.basis, r.germ.variables, compressed=False) == ["x*y", "y", "x", "1"]


def test_brieskorn_basis_is_the_box():
    r = pipeline("x^5+y^7")
    assert {e.point for e in r.basis} == {(i, j) for i in range(1, 5) for j in range(1, 7)}


def test_level_counts_match_decomposition(fixture_name):
    r = fixture_result(fixture_name)
    from newton_spectra.local import LocalDecomposition

    sp = LocalDecomposition(r.lattice).spectrum_polynomial()
    assert Counter(e.h for e in r.basis) == Counter(dict(sp.items()))


def test_non_simplicial_boundary_is_rejected():
    g = parse_germ("x^6+y^6+z^6+x^2*y^2*z+x*y^2*z^2+x^2*y*z^2")
    L = compact_faces(g)
    S = triangulate(L)
    with pytest.raises(SimplicialityError):
        build_basis(g, L, S, weight_function(S))
