"""Combinatorial monomial basis of the Milnor algebra.

Every face rho of the Newton boundary contributes the points of its open
cell (the seeds) and a set of Hodge strings (see :mod:`.local`).  Position j
of a string starting at offset a is realised as the seed translated by the
sum of a + j vertices of one facet simplex containing rho:

* offset 0 is the seed itself;
* adding all vertices of the facet outside rho gives the canonical copy,
  with respect to that facet, of the seed's partner in the open cell;
* intermediate positions are non-canonical copies, spread over distinct
  facet simplices where the star of rho has several.

Seeds of the empty face are the origin, so its strings are realised by
interior vertices and sums of vertices.  Seeds on coordinate planes are always
translated into the open orthant.  Faces that are not simplices have no seed
points; their tokens take the least free lattice point at the required level
inside their cone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from ._linalg import vadd
from .geometry import FaceLattice, is_simplicial, milnor_kouchnirenko, simpliciality_violations
from .germ import Germ, format_monomial
from .local import LocalDecomposition, LocalPiece
from .subdivision import Subdivision, WeightFunction, locate_and_evaluate


class BasisError(RuntimeError):
    pass


class SimplicialityError(BasisError):
    """Copy placement is impossible on a non-simplicial Newton boundary."""


@dataclass(frozen=True)
class CopyInfo:
    source: tuple  # vertices of the face supplying the seed; () for the empty face
    index: int  # 1-based position within the string (c^1 is the seed)
    translation: tuple  # point = seed + translation
    canonical: bool  # translation adds every vertex of `facet` outside `source`
    facet: Optional[int]  # subdivision simplex used for the placement
    fallback: bool = False  # chosen by level search rather than by translation


@dataclass(frozen=True)
class BasisElement:
    """One basis monomial x^(point - 1) with its placement data."""

    point: tuple
    h: Fraction
    owner: int
    face_dim: int
    face_interior: bool
    string_length: int
    position: int
    copy: CopyInfo

    @property
    def monomial(self) -> tuple:
        return tuple(c - 1 for c in self.point)

    @property
    def skeleton_dim(self) -> int:
        """Dimension of the open cone skeleton carrying the seed."""
        return self.face_dim + 1

    @property
    def spectral_number(self) -> Fraction:
        return self.h - 1


def _points_at_level(lattice: FaceLattice, level: Fraction, bound) -> Iterable[tuple]:
    """Lattice points with all coordinates >= 1 and h = level, lexicographic."""
    ranges = [range(1, int(level * b) + 1) for b in bound]
    for p in itertools.product(*ranges):
        if lattice.newton_function(p) == level:
            yield p


class _Realiser:
    def __init__(self, g: Germ, lattice: FaceLattice, sub: Subdivision, weights: WeightFunction):
        self.g = g
        self.lattice = lattice
        self.sub = sub
        self.weights = weights
        self.n = g.n
        self.used: set = set()
        self.elements: list = []
        self.axis_bound = []
        for i in range(self.n):
            axis = [v[i] for v in lattice.vertices if all(v[j] == 0 for j in range(self.n) if j != i)]
            self.axis_bound.append(max(axis))

    def containing(self, verts) -> list:
        return [s for s in self.sub.simplices if set(verts) <= set(s.vertices)]

    def _ok(self, p) -> bool:
        return p not in self.used and all(c >= 1 for c in p)

    def _emit(self, point, h, piece: LocalPiece, length, position, copy: CopyInfo):
        owner, value = locate_and_evaluate(self.weights, self.sub, point)
        if value != h:
            raise BasisError(f"placement of {point} at level {h} but h = {value}")
        self.used.add(point)
        self.elements.append(
            BasisElement(
                point=point,
                h=h,
                owner=owner,
                face_dim=piece.dim,
                face_interior=piece.is_interior,
                string_length=length,
                position=position,
                copy=copy,
            )
        )

    def _translation_candidates(self, seed, verts, k, rotate):
        facets = self.containing(verts) if verts else list(self.sub.simplices)
        if not facets:
            return
        m = len(facets)
        for i in range(m):
            facet = facets[(rotate + i) % m]
            rest = sorted(set(facet.vertices) - set(verts))
            if k > len(rest):
                continue
            for S in itertools.combinations(rest, k):
                shift = tuple(map(sum, zip(*S))) if S else tuple([0] * self.n)
                yield vadd(seed, shift), shift, facet.id, len(S) == len(rest) and bool(verts)

    def carrier(self, point) -> tuple:
        """Vertices of the least face whose cone contains ``point``."""
        h = self.lattice.newton_function(point)
        tight = [f for f in self.lattice.facets if sum(a * b for a, b in zip(f.covector, point)) == h]
        zero = [i for i, c in enumerate(point) if c == 0]
        verts = set(tight[0].vertices)
        for f in tight[1:]:
            verts &= set(f.vertices)
        return tuple(sorted(v for v in verts if all(v[i] == 0 for i in zero)))

    def _fallback(self, piece, level, length, position, seed):
        verts = set(piece.vertices)
        free = [p for p in _points_at_level(self.lattice, level, self.axis_bound) if self._ok(p)]
        if position == 0 and verts:
            ranked = [p for p in free if set(self.carrier(p)) == verts]
        else:
            ranked = [p for p in free if verts <= set(self.carrier(p))]
        ranked += [p for p in free if p not in ranked]
        if not ranked:
            raise BasisError(f"no free lattice point at level {level} for face {piece.vertices}")
        p = ranked[0]
        shift = tuple(a - b for a, b in zip(p, seed)) if seed is not None else p
        info = CopyInfo(piece.vertices, position + 1, shift, False, None, fallback=True)
        self._emit(p, level, piece, length, position, info)

    def place(self, piece: LocalPiece):
        seeds = piece.open_points
        if seeds is not None:
            got = sorted(h for _, h in seeds)
            want = sorted(e for e, c in piece.ell.items() for _ in range(c))
            if got != want:
                raise BasisError(f"open cell of {piece.vertices} disagrees with its local polynomial")
        for si, string in enumerate(piece.strings):
            if seeds is None:
                tokens = [(None, e) for e, c in piece.ell.items() for _ in range(c)]
            else:
                tokens = seeds
            for ti, (seed, h0) in enumerate(tokens):
                for j, k in enumerate(string.offsets):
                    level = h0 + k
                    if seed is None:
                        self._fallback(piece, level, string.length, j, None)
                        continue
                    for point, shift, fid, canonical in self._translation_candidates(
                        seed, piece.vertices, k, si + j + ti
                    ):
                        if self._ok(point):
                            info = CopyInfo(piece.vertices, j + 1, shift, canonical, fid)
                            self._emit(point, level, piece, string.length, j, info)
                            break
                    else:
                        self._fallback(piece, level, string.length, j, seed)


def _piece_order(piece: LocalPiece):
    if piece.face is None:
        group = 1
    elif piece.open_points is None:
        group = 3
    elif piece.is_interior:
        group = 0
    else:
        group = 2
    return (group, piece.dim, piece.vertices)


def build_basis(
    g: Germ,
    lattice: FaceLattice,
    sub: Subdivision,
    weights: WeightFunction,
    decomposition: Optional[LocalDecomposition] = None,
) -> list:
    """A mu-element monomial basis with copy placement data.

    Raises :class:`SimplicialityError` if the boundary is not simplicial and
    :class:`BasisError` if the count differs from the Kouchnirenko number.
    """
    if not is_simplicial(lattice):
        bad = [f.vertices for f in simpliciality_violations(lattice)]
        raise SimplicialityError(f"Newton boundary is not simplicial at faces {bad}")
    decomposition = decomposition or LocalDecomposition(lattice)
    realiser = _Realiser(g, lattice, sub, weights)
    for piece in sorted(decomposition.pieces, key=_piece_order):
        realiser.place(piece)
    elements = realiser.elements
    mu = milnor_kouchnirenko(g, lattice)
    if len(elements) != mu:
        raise BasisError(f"basis has {len(elements)} elements, Kouchnirenko gives {mu}")
    if len({e.point for e in elements}) != len(elements):
        raise BasisError("basis contains a repeated point")
    return elements


def sort_key(monomial: tuple) -> tuple:
    """Listing order: last variable most significant, descending."""
    return tuple(reversed(monomial))


def basis_monomials(elements: Iterable[BasisElement], variables, compressed: bool = True) -> list:
    """Monomials in listing order (descending, last variable most significant)."""
    monos = sorted((e.monomial for e in elements), key=sort_key, reverse=True)
    return [format_monomial(m, variables, compressed=compressed) for m in monos]
