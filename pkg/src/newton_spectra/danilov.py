"""Hodge numbers straight from lattice-point counts of cones over faces.

This route never looks at half-open cells, triangulations or basis elements.
For each face gamma it scans the lattice points of relint cone(gamma) with
h <= dim + 1 and turns their level counts into the numerator polynomial of
the cone's Poincare series.  Interval g-polynomials convert these into local
polynomials, and the alternating sum over the coordinate planes is split
by Hodge level.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from ._linalg import independent_rows, rank, solve
from .faceposet import EMPTY, FacePoset
from .fracpoly import FracPoly
from .geometry import FaceLattice, is_simplicial


class DanilovError(RuntimeError):
    pass


def _carrier(lattice: FaceLattice, point) -> tuple:
    h = lattice.newton_function(point)
    tight = [f for f in lattice.facets if sum(a * b for a, b in zip(f.covector, point)) == h]
    verts = set(tight[0].vertices)
    for f in tight[1:]:
        verts &= set(f.vertices)
    zero = [i for i, c in enumerate(point) if c == 0]
    return tuple(sorted(v for v in verts if all(v[i] == 0 for i in zero)))


def relint_level_counts(lattice: FaceLattice, vertices: Sequence, top) -> Counter:
    """Counter {h: number of lattice points of relint cone(face) at level h <= top}."""
    vertices = tuple(sorted(vertices))
    if not vertices:
        return Counter({Fraction(0): 1})
    n = lattice.n
    support = [i for i in range(n) if any(v[i] for v in vertices)]
    bound = {i: max(v[i] for v in vertices) * top for i in support}
    counts: Counter = Counter()
    for sub in itertools.product(*(range(1, int(bound[i]) + 1) for i in support)):
        point = [0] * n
        for i, c in zip(support, sub):
            point[i] = c
        point = tuple(point)
        h = lattice.newton_function(point)
        if h <= top and _carrier(lattice, point) == vertices:
            counts[h] += 1
    return counts


def cone_numerator(lattice: FaceLattice, vertices: Sequence) -> FracPoly:
    """(1 - t)^(d+1) * sum over relint cone(face) of t^h, exact in degrees <= d+1."""
    d = len(vertices) - 1 if vertices else -1
    if d < 0:
        return FracPoly({0: 1})
    face = lattice.face(vertices)
    d = face.dim
    series = FracPoly(relint_level_counts(lattice, vertices, d + 1))
    return (series * FracPoly.one_minus_t_power(d + 1)).truncate(d + 1)


def poincare_cone(vertices: Sequence, h_covector: Sequence, cap) -> FracPoly:
    """Truncated Poincare series of the closed cone over a simplex.

    Sum of t^h(beta) over lattice points of cone(vertices) with h < cap, where
    h is the linear function ``h_covector`` (equal to 1 on the vertices).
    """
    verts = [tuple(v) for v in vertices]
    k = len(verts)
    n = len(verts[0])
    if rank(verts) != k:
        raise DanilovError(f"vertices {verts} are not independent")
    coords = independent_rows(verts)
    system = [[v[c] for v in verts] for c in coords]
    bound = [max(v[i] for v in verts) * cap for i in range(n)]
    acc: Counter = Counter()
    for p in itertools.product(*(range(int(b) + 1) for b in bound)):
        h = sum(Fraction(a) * b for a, b in zip(h_covector, p))
        if h >= cap:
            continue
        b = solve(system, [p[c] for c in coords])
        if b is None or any(x < 0 for x in b):
            continue
        if all(sum(bi * v[c] for bi, v in zip(b, verts)) == p[c] for c in range(n)):
            acc[h] += 1
    return FracPoly(acc)


def poincare_evaluation(vertices: Sequence, h_covector: Sequence) -> int:
    """((1 - t)^k P(t)) at t = 1, with P truncated just past the cell degrees."""
    k = len(vertices)
    P = poincare_cone(vertices, h_covector, k)
    return (P * FracPoly.one_minus_t_power(k)).filter(lambda e: e < k).at_one()


@dataclass
class DanilovData:
    numerators: dict  # face vertices -> (1-t)^(d+1) relint series
    local: dict  # face vertices -> local polynomial
    placement: dict  # face vertices -> integer polynomial splitting into Hodge levels


def _coordinate_factor(n: int, s: int, d: int) -> FracPoly:
    sign = -1 if (n - s) % 2 else 1
    return FracPoly.one_minus_t_power(s - d - 1).shift(n - s) * sign


def danilov_data(lattice: FaceLattice) -> DanilovData:
    n = lattice.n
    poset = FacePoset(lattice)
    dim = poset.dim
    numer = {v: cone_numerator(lattice, v) for v in poset.elements}
    # closed-cone numerators are the reflections of the open ones
    closed = {v: numer[v].reflect(dim[v] + 1) for v in poset.elements}
    local = {}
    for s in poset.elements:
        total = FracPoly()
        for r in poset.between(EMPTY, s):
            sign = -1 if (dim[s] - dim[r]) % 2 else 1
            total = total + closed[r] * poset.g_dual(r, s) * sign
        local[s] = total

    def span(v):
        return sum(1 for i in range(n) if any(x[i] for x in v)) if v else 0

    placement = {}
    for r in poset.elements:
        total = FracPoly()
        for s in poset.elements:
            if set(r) <= set(s):
                total = total + poset.g(r, s).reflect(dim[s] - dim[r]) * _coordinate_factor(n, span(s), dim[s])
        placement[r] = total
    return DanilovData(numer, local, placement)


def danilov_hodge_numbers(lattice: FaceLattice, n: Optional[int] = None) -> Counter:
    """Counter {(p, q, chi): h^{p,q}_chi} assembled face by face."""
    if not is_simplicial(lattice):
        raise DanilovError("Newton boundary is not simplicial")
    n = n or lattice.n
    data = danilov_data(lattice)
    poset = FacePoset(lattice)
    table: Counter = Counter()
    for r in poset.elements:
        ell, G = data.local[r], data.placement[r]
        if not ell or not G:
            continue
        top = n - poset.dim[r] - 1
        # primitive parts of the symmetric unimodal G
        prim = {a: G.coefficient(a) - G.coefficient(a - 1) for a in range(top // 2 + 1)}
        for e, c in ell.items():
            for a, k in prim.items():
                if k < 0:
                    raise DanilovError(f"placement polynomial of {r} is not unimodal")
                for j in range(top - 2 * a + 1):
                    h = e + a + j
                    chi = h - math.floor(h)
                    level = (n if chi == 0 else n - 1) + top - 2 * a - 2 * j
                    p = math.floor(n - h)
                    table[(p, level - p, chi)] += c * k
    return Counter({k: v for k, v in table.items() if v})


@dataclass
class CrossCheckReport:
    disagreements: list = field(default_factory=list)  # (key, a, b)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def cross_check(table_a: Mapping, table_b: Mapping) -> CrossCheckReport:
    keys = sorted(set(table_a) | set(table_b))
    return CrossCheckReport([(k, table_a.get(k, 0), table_b.get(k, 0)) for k in keys if table_a.get(k, 0) != table_b.get(k, 0)])
