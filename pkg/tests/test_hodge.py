from collections import Counter
from fractions import Fraction as Q

import pytest

from newton_spectra.fixtures import load_fixture
from newton_spectra.hodge import hodge_class, verify_symmetries
from newton_spectra.spp import SpectralPairs, diff_spp

from conftest import F1, fixture_result, pipeline


def test_f1_half_level_top_of_string():
    c = hodge_class(Q(1, 2), 2, 2, 0)
    assert (c.p, c.q, c.chi, c.pair) == (1, 1, Q(1, 2), (Q(-1, 2), 2))


def test_integral_level_in_three_variables():
    c = hodge_class(Q(1), 3, 2, 0)
    assert (c.p, c.q, c.chi, c.w) == (2, 2, 0, 3)
    assert c.pair == (0, 3)
    low = hodge_class(Q(1), 3, 2, 1)
    assert (low.p, low.q, low.w) == (2, 0, 1)


def test_middle_of_odd_string():
    c = hodge_class(Q(3, 2), 3, 3, 1)
    assert (c.p, c.q, c.w) == (1, 1, 2)


def test_quadric_pair():
    r = pipeline("x^2+y^2")
    assert [c.pair for c in r.classes] == [(0, 1)]
    assert r.hodge == Counter({(1, 1, 0): 1})


def test_fixtures_match_reference(fixture_name):
    r = fixture_result(fixture_name)
    ref = load_fixture(fixture_name).reference
    d = diff_spp(r.spectral_pairs, ref)
    assert not d, d.lines()


@pytest.mark.parametrize("name, entries", [("f1", 69), ("f2", 13), ("f3", 29)])
def test_distinct_pair_counts(name, entries):
    assert len(fixture_result(name).spectral_pairs) == entries


def test_symmetries_hold(fixture_name):
    r = fixture_result(fixture_name)
    report = verify_symmetries(r.spectral_pairs, r.hodge, r.n, r.milnor)
    assert report.ok, report.counterexamples


def test_f3_partners():
    t = fixture_result("f3").hodge
    assert t[(0, 0, Q(1, 2))] == t[(2, 2, Q(1, 2))] == 1
    assert t[(1, 2, 0)] == t[(2, 1, 0)] == 9
    assert t[(1, 1, Q(1, 8))] == t[(1, 1, Q(7, 8))]


def test_f2_partners():
    t = fixture_result("f2").hodge
    assert t[(2, 2, 0)] == t[(1, 1, 0)] == 1
    assert t[(1, 1, Q(1, 2))] == 7


def test_symmetry_violation_is_reported():
    sp = SpectralPairs.from_pairs([(Q(-1, 3), 0)])
    table = Counter({(1, 0, Q(2, 3)): 1})
    report = verify_symmetries(sp, table, 2, 1)
    assert not report.ok
    assert not report.spp_symmetric and not report.hodge_symmetric


def test_classes_in_range(fixture_name):
    r = fixture_result(fixture_name)
    for c in r.classes:
        assert 0 <= c.p <= r.n and 0 <= c.q <= r.n
        assert c.alpha > -1 and c.alpha < r.n - 1
