"""Brute-force cross-checks, independent of the cell and placement machinery.

* :func:`milnor_oracle` computes a monomial basis of O/J(f) by exact row
  reduction of the truncated Jacobian ideal, with columns ordered by the
  Newton level h(alpha + 1).  Truncating at degree D computes
  O/(J + m^(D+1)); equal dimensions at D and D+1 force m^(D+1) inside J
  (Nakayama), so the answer is then exact.
* :func:`newton_level_counts` reads the graded dimensions of the Newton
  filtration off the standard monomials.
* :func:`nondegeneracy_check` tests each face with the graded algebra of its
  cone modulo the toric derivatives x_i d_i f^tau.
* :func:`volume_count_oracle` counts half-open cell points by the definition.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ._echelon import Echelon as _Echelon
from ._linalg import independent_rows, rank, solve
from .geometry import FaceLattice, compact_faces
from .germ import Germ

DEFAULT_CEILING = 60


class OracleError(RuntimeError):
    pass


def _ceiling() -> int:
    raw = os.environ.get("SPECTRA_ORACLE_CEILING")
    return int(raw) if raw else DEFAULT_CEILING


def _monomials_up_to(n: int, D: int):
    if n == 1:
        for a in range(D + 1):
            yield (a,)
        return
    for a in range(D + 1):
        for rest in _monomials_up_to(n - 1, D - a):
            yield (a,) + rest


@dataclass(frozen=True)
class MilnorOracleResult:
    mu: int
    cap: int
    standard: tuple  # exponent vectors alpha, ordered by level then lexicographically
    levels: tuple  # h(alpha + 1) for each standard monomial

    def level_counts(self) -> Counter:
        return Counter(self.levels)


class _Truncated:
    def __init__(self, g: Germ, lattice: FaceLattice, D: int):
        self.g = g
        self.D = D
        n = g.n
        monos = list(_monomials_up_to(n, D))
        self.level = {m: lattice.newton_function(tuple(a + 1 for a in m)) for m in monos}
        order = sorted(monos, key=lambda m: (self.level[m], m))
        self.col = {m: i for i, m in enumerate(order)}
        self.order = order
        self.ech = _Echelon()
        for i in range(n):
            d = g.derivative(i)
            if not d:
                continue
            low = min(sum(e) for e in d)
            for m in _monomials_up_to(n, D - low):
                row = {}
                for e, c in d.items():
                    prod = tuple(a + b for a, b in zip(m, e))
                    if sum(prod) <= D:
                        k = self.col[prod]
                        row[k] = row.get(k, 0) + c
                self.ech.add(row)

    def standard(self) -> list:
        return [m for m in self.order if self.col[m] not in self.ech.pivots]


def milnor_oracle(g: Germ, cap: Optional[int] = None, lattice: Optional[FaceLattice] = None) -> MilnorOracleResult:
    """Milnor number and Newton-ordered standard monomials by linear algebra.

    ``cap`` fixes the first truncation degree; it grows by one until two
    consecutive truncations give the same standard monomials or
    SPECTRA_ORACLE_CEILING is exceeded.
    """
    lattice = lattice or compact_faces(g)
    D = cap if cap is not None else max(sum(e) for e in g.support) + 1
    ceiling = _ceiling()
    prev = None
    while D <= ceiling:
        t = _Truncated(g, lattice, D)
        std = t.standard()
        if prev is not None and std == prev[1]:
            return MilnorOracleResult(
                mu=len(std),
                cap=D,
                standard=tuple(std),
                levels=tuple(t.level[m] for m in std),
            )
        prev = (D, std)
        D += 1
    raise OracleError(f"truncated Milnor algebra did not stabilise below degree {ceiling}; possibly non-isolated")


def newton_level_counts(g: Germ, lattice: Optional[FaceLattice] = None) -> Counter:
    """Counter {h: dim gr_h} of the Newton filtration on the Milnor algebra."""
    return milnor_oracle(g, lattice=lattice).level_counts()


def basis_rank_defect(g: Germ, monomials: Sequence[tuple], cap: int, lattice: Optional[FaceLattice] = None) -> int:
    """mu minus the rank of the given monomials in O/(J + m^(cap+1))."""
    lattice = lattice or compact_faces(g)
    t = _Truncated(g, lattice, cap)
    before = len(t.ech.pivots)
    for m in monomials:
        if sum(m) <= cap:
            t.ech.add({t.col[m]: 1})
    mu = len(t.order) - before
    return mu - (len(t.ech.pivots) - before)


def _face_covector(lattice: FaceLattice, face) -> tuple:
    for f in lattice.facets:
        if set(face.vertices) <= set(f.vertices):
            return f.covector
    raise OracleError(f"face {face.vertices} lies in no facet")


def _cone_test(verts):
    """Membership test for cone(verts), by Caratheodory over linear bases.

    The inverse of every basis minor is computed once, so each query costs
    a few dot products.
    """
    r = rank(verts)
    n = len(verts[0])
    bases = []
    for sub in itertools.combinations(verts, r):
        if rank(sub) != r:
            continue
        coords = independent_rows(sub)
        system = [[v[c] for v in sub] for c in coords]
        inv = [solve(system, [1 if i == j else 0 for i in range(r)]) for j in range(r)]
        bases.append((sub, coords, inv))

    def test(p) -> bool:
        if not any(p):
            return True
        for sub, coords, inv in bases:
            b = [sum(inv[j][i] * p[c] for j, c in enumerate(coords)) for i in range(r)]
            if any(x < 0 for x in b):
                continue
            if all(sum(bi * v[c] for bi, v in zip(b, sub)) == p[c] for c in range(n)):
                return True
        return False

    return test


def face_nondegenerate(g: Germ, lattice: FaceLattice, face) -> bool:
    """True iff f restricted to ``face`` has no critical point in the torus.

    Works in the semigroup ring of cone(face) graded by the face covector.
    The quotient by the x_i d_i f^face is finite exactly when the face is
    non-degenerate, and then it vanishes in degrees >= dim + 1; a nonzero
    piece in the window [dim + 1, dim + 2) therefore witnesses degeneracy.
    """
    lam = _face_covector(lattice, face)
    verts = face.vertices
    d = face.dim

    def deg(p):
        return sum(a * b for a, b in zip(lam, p))

    in_cone = _cone_test(verts)
    ftau = {e: c for e, c in g.terms.items() if deg(e) == 1 and in_cone(e)}
    toric = [{e: c * e[i] for e, c in ftau.items() if e[i]} for i in range(g.n)]
    toric = [t for t in toric if t]
    bound = [max(v[i] for v in verts) * (d + 2) for i in range(g.n)]
    lo, hi = d + 1, d + 2
    points = [
        p for p in itertools.product(*(range(b + 1) for b in bound))
        if deg(p) < hi and in_cone(p)
    ]
    col = {p: i for i, p in enumerate(p for p in points if deg(p) >= lo)}
    if not col:
        return True
    ech = _Echelon()
    for m in points:
        if not lo - 1 <= deg(m) < hi - 1:
            continue
        for t in toric:
            row = {}
            for e, c in t.items():
                k = col[tuple(a + b for a, b in zip(m, e))]
                row[k] = row.get(k, 0) + c
            ech.add(row)
    return len(ech.pivots) == len(col)


@dataclass(frozen=True)
class FaceVerdict:
    vertices: tuple
    dim: int
    nondegenerate: bool


def nondegeneracy_check(g: Germ, lattice: Optional[FaceLattice] = None) -> list:
    """Per-face verdicts; the germ is non-degenerate iff every verdict is True."""
    lattice = lattice or compact_faces(g)
    return [FaceVerdict(f.vertices, f.dim, face_nondegenerate(g, lattice, f)) for f in lattice.faces]


def is_nondegenerate(g: Germ, lattice: Optional[FaceLattice] = None) -> bool:
    return all(v.nondegenerate for v in nondegeneracy_check(g, lattice))


def _adjugate(rows):
    """Integer adjugate and determinant of a square integer matrix."""
    k = len(rows)

    def det(m):
        if len(m) == 1:
            return m[0][0]
        return sum(
            (-1) ** j * m[0][j] * det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m))
        )

    D = det(rows)
    if k == 1:
        return [[1]], D
    adj = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = [r[:j] + r[j + 1:] for idx, r in enumerate(rows) if idx != i]
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return adj, D


def volume_count_oracle(vertices: Sequence[Sequence[int]]) -> int:
    """#{Z^n in cone} minus the translates m_i + cone, scanning a bounding box.

    ``vertices`` are n linearly independent integer vectors.  Cone membership
    uses the integer adjugate, so no rational arithmetic is involved.
    """
    verts = [list(map(int, v)) for v in vertices]
    n = len(verts)
    cols = [[verts[j][i] for j in range(n)] for i in range(n)]  # columns are the vertices
    adj, D = _adjugate(cols)
    if D == 0:
        raise OracleError("degenerate simplex")
    sign = 1 if D > 0 else -1

    def in_cone(p):
        return all(sign * sum(adj[i][c] * p[c] for c in range(n)) >= 0 for i in range(n))

    lo = [sum(min(0, v[i]) for v in verts) for i in range(n)]
    hi = [sum(max(0, v[i]) for v in verts) for i in range(n)]
    count = 0
    for p in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if not in_cone(p):
            continue
        if any(in_cone([a - b for a, b in zip(p, v)]) for v in verts):
            continue
        count += 1
    return count
