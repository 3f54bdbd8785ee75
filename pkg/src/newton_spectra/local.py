"""Face-by-face decomposition of the spectrum with Hodge-level placement.

For every face rho of the Newton boundary (including the empty face) we form

* ``ell``: the local polynomial of rho.  For a simplex it is the generating
  function sum t^h(p) over the open cell {sum b_i v_i : 0 < b_i < 1}; for
  other faces it is obtained from the cone series of the face and its
  subfaces with g-polynomial corrections.
* ``G``: the placement polynomial, an integer-exponent polynomial collecting
  how the cones over faces containing rho enter the alternating sum over
  coordinate planes.  For a face off the coordinate hyperplanes of a
  simplicial boundary it is 1 + t + ... + t^(n-1-dim rho).

The spectrum is sum ell_rho * G_rho.  Each G is split into symmetric strings
(Lefschetz strings); a string of length L places copies of one local point at
L consecutive Hodge levels, which is what fixes the weight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional

from .cells import half_open_cell
from .faceposet import EMPTY, FacePoset
from .fracpoly import FracPoly
from .geometry import Face, FaceLattice
from .subdivision import triangulate_face


class PlacementError(RuntimeError):
    """A placement polynomial cannot be split into symmetric strings."""


@dataclass(frozen=True)
class HodgeString:
    start: int  # integer exponent offset of the first copy
    length: int

    @property
    def offsets(self) -> range:
        return range(self.start, self.start + self.length)


@dataclass
class LocalPiece:
    face: Optional[Face]  # None for the empty face
    dim: int
    support_size: int
    ell: FracPoly
    G: FracPoly
    open_points: Optional[list] = None  # [(point, h)] for simplex faces
    strings: list = field(default_factory=list)

    @property
    def vertices(self) -> tuple:
        return self.face.vertices if self.face is not None else EMPTY

    @property
    def is_interior(self) -> bool:
        return self.face is not None and self.face.is_interior


def _closed_box_series(vertices) -> FracPoly:
    """(0,1]-cell series of a simplex cone: h = k - sum b over the [0,1) cell."""
    k = len(vertices)
    cell = half_open_cell(vertices)
    return FracPoly.from_exponents(k - sum(b) for b in cell.coefficients)


def open_cell_points(vertices) -> list:
    """[(point, h)] for points with all cell coefficients strictly inside (0, 1)."""
    cell = half_open_cell(vertices)
    return [(p, sum(b)) for p, b in zip(cell.points, cell.coefficients) if all(x > 0 for x in b)]


def lefschetz_strings(G: FracPoly, center2: int) -> list:
    """Split a palindromic unimodal polynomial into strings symmetric about center2/2."""
    if not G:
        return []
    for e in G.terms:
        if e.denominator != 1:
            raise PlacementError(f"placement polynomial has a fractional exponent: {G}")
    if not G.is_nonnegative():
        raise PlacementError(f"placement polynomial has a negative coefficient: {G}")
    if not G.is_palindromic(center2):
        raise PlacementError(f"placement polynomial {G} is not symmetric about {Fraction(center2, 2)}")
    strings = []
    prev = 0
    a = 0
    while 2 * a <= center2:
        c = G.coefficient(a)
        if c < prev:
            raise PlacementError(f"placement polynomial {G} is not unimodal")
        strings.extend([HodgeString(a, center2 - 2 * a + 1)] * (c - prev))
        prev = c
        a += 1
    return strings


class LocalDecomposition:
    """ell/G data for every face, built from a face lattice."""

    def __init__(self, lattice: FaceLattice):
        self.lattice = lattice
        self.n = lattice.n
        self.poset = FacePoset(lattice)
        self._faces = {f.vertices: f for f in lattice.faces}

    def dim(self, verts) -> int:
        return self.poset.dim[verts]

    def support_size(self, verts) -> int:
        if verts == EMPTY:
            return 0
        return sum(1 for i in range(self.n) if any(v[i] != 0 for v in verts))

    @cached_property
    def cell_series(self) -> dict:
        """(0,1]-cell series J_c for every cell c of the pulling triangulations."""
        cells = {EMPTY: FracPoly({0: 1})}
        for f in self.lattice.faces:
            for simplex in triangulate_face(self.lattice, f):
                for r in range(1, len(simplex) + 1):
                    for c in itertools.combinations(simplex, r):
                        if c not in cells:
                            cells[c] = _closed_box_series(c)
        return cells

    def _cells_of(self, verts) -> list:
        if verts == EMPTY:
            return [EMPTY]
        face = self._faces[verts]
        cells = {EMPTY}
        for simplex in triangulate_face(self.lattice, face):
            for r in range(1, len(simplex) + 1):
                cells.update(itertools.combinations(simplex, r))
        return list(cells)

    @cached_property
    def cone_series(self) -> dict:
        """H_sigma = (1-t)^(dim+1) * sum over cone(sigma) of t^h, per face."""
        out = {}
        for verts in self.poset.elements:
            d = self.dim(verts)
            total = FracPoly()
            for c in self._cells_of(verts):
                dc = len(c) - 1
                total = total + self.cell_series[c] * FracPoly.one_minus_t_power(d - dc)
            out[verts] = total
        return out

    @cached_property
    def ell(self) -> dict:
        out = {}
        for sigma in self.poset.elements:
            ds = self.dim(sigma)
            total = FracPoly()
            for rho in self.poset.between(EMPTY, sigma):
                sign = -1 if (ds - self.dim(rho)) % 2 else 1
                total = total + self.cone_series[rho] * self.poset.g_dual(rho, sigma) * sign
            out[sigma] = total
        return out

    def coordinate_factor(self, verts) -> FracPoly:
        """(1-t)^(s-d-1) (-t)^(n-s) for a face spanning s coordinates."""
        s = self.support_size(verts)
        d = self.dim(verts)
        sign = -1 if (self.n - s) % 2 else 1
        return FracPoly.one_minus_t_power(s - d - 1).shift(self.n - s) * sign

    @cached_property
    def placement(self) -> dict:
        out = {}
        for rho in self.poset.elements:
            dr = self.dim(rho)
            total = FracPoly()
            for sigma in self.poset.elements:
                if not self.poset.leq(rho, sigma):
                    continue
                m = self.dim(sigma) - dr
                total = total + self.poset.g(rho, sigma).reflect(m) * self.coordinate_factor(sigma)
            out[rho] = total
        return out

    @cached_property
    def pieces(self) -> list:
        pieces = []
        for verts in self.poset.elements:
            ell = self.ell[verts]
            G = self.placement[verts]
            if not ell or not G:
                continue
            face = self._faces.get(verts)
            d = self.dim(verts)
            pts = None
            if face is None:
                pts = [(tuple([0] * self.n), Fraction(0))]
            elif face.is_simplex:
                pts = open_cell_points(verts)
            strings = lefschetz_strings(G, self.n - d - 1)
            pieces.append(
                LocalPiece(face, d, self.support_size(verts), ell, G, pts, strings)
            )
        return pieces

    def spectrum_polynomial(self) -> FracPoly:
        total = FracPoly()
        for piece in self.pieces:
            total = total + piece.ell * piece.G
        return total

    def alternating_spectrum(self) -> FracPoly:
        """sum_sigma J_sigma * coordinate factor, without the local split."""
        total = FracPoly()
        for verts in self.poset.elements:
            d = self.dim(verts)
            J = self.cone_series[verts].reflect(d + 1)
            total = total + J * self.coordinate_factor(verts)
        return total
