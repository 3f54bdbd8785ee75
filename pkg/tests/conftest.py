from functools import lru_cache

import pytest

from newton_spectra import compact_faces, compute, parse_germ, triangulate, weight_function
from newton_spectra.fixtures import load_fixture


@lru_cache(maxsize=None)
def pipeline(text, variables=None):
    g = parse_germ(text, variables)
    return compute(g)


@lru_cache(maxsize=None)
def fixture_result(name):
    fx = load_fixture(name)
    return compute(parse_germ(fx.germ, fx.variables))


@lru_cache(maxsize=None)
def geometry(text):
    g = parse_germ(text)
    L = compact_faces(g)
    S = triangulate(L)
    return g, L, S, weight_function(S)


@pytest.fixture(params=["f1", "f2", "f3"])
def fixture_name(request):
    return request.param


F1 = "x15+x6y4+x3y6+y12"
F2 = "x4+y4+z8+x2z2+y2z2"
F3 = "x8+y8+z8+x2y2z2"
