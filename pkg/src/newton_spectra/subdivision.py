"""Simplex subdivision of the Newton boundary and the piecewise-linear weight h."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ._linalg import dot, lcm, rank, solve
from .geometry import Face, FaceLattice, GeometryError


@dataclass(frozen=True)
class Simplex:
    id: int
    vertices: tuple
    parent: int  # id of the Newton-boundary facet containing it


@dataclass
class Subdivision:
    n: int
    simplices: list

    def __iter__(self):
        return iter(self.simplices)

    def __len__(self):
        return len(self.simplices)

    def to_dict(self) -> dict:
        return {
            "simplices": [
                {"id": s.id, "parent": s.parent, "vertices": [list(v) for v in s.vertices]}
                for s in self.simplices
            ]
        }


@dataclass
class WeightFunction:
    covectors: list  # one rational n-vector per simplex, indexed by simplex id
    M: int

    def value(self, simplex_id: int, point) -> Fraction:
        return dot(self.covectors[simplex_id], point)

    def to_dict(self) -> dict:
        return {
            "M": self.M,
            "covectors": [[f"{c.numerator}/{c.denominator}" for c in w] for w in self.covectors],
        }


def triangulate_face(lattice: FaceLattice, face: Face) -> list:
    """Pulling triangulation of a face at its lexicographically least vertex.

    Returns a list of vertex tuples, each an affinely independent simplex of
    dimension ``face.dim``.  Simplices pass through unchanged.
    """
    if face.is_simplex:
        return [tuple(face.vertices)]
    apex = min(face.vertices)
    out = []
    for sub in lattice.subfaces(face, face.dim - 1):
        if apex in sub.vertices:
            continue
        for simplex in triangulate_face(lattice, sub):
            out.append(tuple(sorted((apex,) + tuple(simplex))))
    if not out:
        raise GeometryError(f"degenerate face {face.vertices}")
    return out


def triangulate(lattice: FaceLattice) -> Subdivision:
    """Deterministic simplex subdivision of all facets of Gamma(f)."""
    n = lattice.n
    simplices = []
    for facet in lattice.facets:
        if rank(facet.vertices) != n:
            raise GeometryError(f"degenerate facet {facet.vertices}")
        for verts in triangulate_face(lattice, facet):
            simplices.append(Simplex(len(simplices), verts, facet.id))
    return Subdivision(n, simplices)


def weight_function(sub: Subdivision) -> WeightFunction:
    """Per-simplex covectors w with w . v = 1 on every vertex, and the integer M."""
    covs = []
    m = 1
    for s in sub.simplices:
        w = solve(s.vertices, [1] * sub.n)
        if w is None:
            raise GeometryError(f"singular simplex {s.vertices}")
        covs.append(w)
        for c in w:
            m = lcm(m, c.denominator)
    return WeightFunction(covs, m)


def cone_coordinates(simplex: Simplex, point) -> Optional[tuple]:
    """Coefficients b with point = sum b_i v_i (full-dimensional simplex)."""
    cols = list(zip(*simplex.vertices))  # rows of the transposed matrix
    return solve(cols, point)


def locate_and_evaluate(weights: WeightFunction, sub: Subdivision, point) -> tuple:
    """Owning simplex of ``point`` (= alpha + 1) and h(point).

    The owner is the least-id simplex whose closed parallelepiped contains the
    point; failing that, the least-id simplex whose cone contains it.
    """
    in_cone = []
    for s in sub.simplices:
        b = cone_coordinates(s, point)
        if b is not None and all(x >= 0 for x in b):
            in_cone.append((s, b))
    if not in_cone:
        raise GeometryError(f"point {point} lies in no cone of the subdivision")
    values = {weights.value(s.id, point) for s, _ in in_cone}
    if len(values) != 1:
        raise GeometryError(f"h is discontinuous at {point}: {sorted(values)}")
    boxed = [s for s, b in in_cone if all(x <= 1 for x in b)]
    owner = (boxed or [s for s, _ in in_cone])[0]
    return owner.id, values.pop()
