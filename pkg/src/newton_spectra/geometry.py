"""Newton polyhedron of a convenient germ: compact faces, volumes, Milnor number.

Everything is exact.  Compact facets are found by brute force over n-subsets
of the minimal support points; every other compact face is an intersection
of facets with each other and with coordinate hyperplanes.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional

from ._linalg import affine_dim, det, dot, solve
from .germ import Germ, NotConvenientError, missing_axes


class GeometryError(RuntimeError):
    """Internal consistency failure in the polyhedral computations."""


@dataclass(frozen=True)
class Face:
    """A compact face of the Newton polyhedron."""

    id: int
    vertices: tuple
    dim: int
    covector: tuple
    zero_axes: frozenset = field(default_factory=frozenset)

    @property
    def is_interior(self) -> bool:
        """True when the face lies in no coordinate hyperplane."""
        return not self.zero_axes

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dim + 1

    def contains(self, other: "Face") -> bool:
        return set(other.vertices) <= set(self.vertices)


@dataclass
class FaceLattice:
    """All compact faces of Gamma_+(f), dimension 0..n-1, with containment."""

    n: int
    faces: list
    facets: list

    def __post_init__(self):
        self._by_vertices = {f.vertices: f for f in self.faces}

    def __iter__(self):
        return iter(self.faces)

    def __len__(self):
        return len(self.faces)

    def face(self, vertices) -> Optional[Face]:
        return self._by_vertices.get(tuple(sorted(vertices)))

    def of_dim(self, d: int) -> list:
        return [f for f in self.faces if f.dim == d]

    def superfaces(self, face: Face, dim: Optional[int] = None) -> list:
        out = [g for g in self.faces if g is not face and g.contains(face)]
        return [g for g in out if dim is None or g.dim == dim]

    def subfaces(self, face: Face, dim: Optional[int] = None) -> list:
        out = [g for g in self.faces if g is not face and face.contains(g)]
        return [g for g in out if dim is None or g.dim == dim]

    def containment(self) -> list:
        """Cover relations (lower id, upper id) of the face poset."""
        pairs = []
        for f in self.faces:
            for g in self.superfaces(f, f.dim + 1):
                pairs.append((f.id, g.id))
        return pairs

    @property
    def vertices(self) -> list:
        return [f.vertices[0] for f in self.of_dim(0)]

    def newton_function(self, point) -> Fraction:
        """h(point) = min over compact facets of covector . point."""
        return min(dot(f.covector, point) for f in self.facets)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "faces": [
                {
                    "id": f.id,
                    "dim": f.dim,
                    "vertices": [list(v) for v in f.vertices],
                    "covector": [_frac_str(c) for c in f.covector],
                    "zero_axes": sorted(f.zero_axes),
                }
                for f in self.faces
            ],
            "containment": self.containment(),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _minimal_points(points) -> list:
    """Support points not dominating another support point."""
    pts = sorted(set(points))
    keep = []
    for p in pts:
        if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in pts):
            keep.append(p)
    return keep


def _require_convenient(g: Germ):
    axes = missing_axes(g)
    if axes:
        raise NotConvenientError(axes, g.variables)


def compact_faces(g: Germ) -> FaceLattice:
    """Face lattice of the Newton boundary Gamma(f) of a convenient germ."""
    _require_convenient(g)
    n = g.n
    support = list(g.terms)
    cand = _minimal_points(support)

    facet_sets = {}
    for combo in itertools.combinations(cand, n):
        lam = solve(combo, [1] * n)
        if lam is None or any(c <= 0 for c in lam):
            continue
        if any(dot(lam, q) < 1 for q in support):
            continue
        on = tuple(sorted(q for q in cand if dot(lam, q) == 1))
        if affine_dim(on) == n - 1:
            facet_sets[lam] = on
    if not facet_sets:
        raise GeometryError("no compact facet found")

    # generating point sets: facets and their traces on coordinate hyperplanes
    gens = set(facet_sets.values())
    for on in list(facet_sets.values()):
        for i in range(n):
            trace = tuple(p for p in on if p[i] == 0)
            if trace:
                gens.add(trace)
    closed = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for a in frontier:
            for b in closed:
                c = tuple(sorted(set(a) & set(b)))
                if c and c not in closed:
                    new.add(c)
        closed |= new
        frontier = new

    # a point is a vertex iff the smallest closed set containing it is itself
    points = sorted({p for s in closed for p in s})
    vertices = set()
    for p in points:
        inter = set(points)
        for s in closed:
            if p in s:
                inter &= set(s)
        if inter == {p}:
            vertices.add(p)
    face_sets = {tuple(p for p in s if p in vertices) for s in closed}
    face_sets.discard(())

    raw = []
    for s in face_sets:
        d = affine_dim(s)
        lams = [lam for lam, on in facet_sets.items() if set(s) <= set(on)]
        cov = tuple(sum(l[i] for l in lams) / len(lams) for i in range(n))
        zero = frozenset(i for i in range(n) if all(p[i] == 0 for p in s))
        raw.append((d, s, cov, zero))
    # distinct closed sets can restrict to the same vertex set; keep unique
    uniq = {}
    for d, s, cov, zero in raw:
        uniq.setdefault(s, (d, s, cov, zero))
    ordered = sorted(uniq.values(), key=lambda r: (r[0], r[1]))
    faces = [Face(i, s, d, cov, zero) for i, (d, s, cov, zero) in enumerate(ordered)]
    facets = [f for f in faces if f.dim == n - 1]
    for f in facets:
        lam = next(l for l, on in facet_sets.items() if set(f.vertices) <= set(on))
        object.__setattr__(f, "covector", lam)
    return FaceLattice(n, faces, facets)


def is_simplicial(lattice: FaceLattice, n: Optional[int] = None) -> bool:
    """Simpliciality in the sense of the Newton-boundary counting condition.

    Every face of dimension d lies in at most n - d faces of dimension d + 1,
    and every facet is full-dimensional (so it can be triangulated).
    """
    n = lattice.n if n is None else n
    for f in lattice.faces:
        if len(lattice.superfaces(f, f.dim + 1)) > n - f.dim:
            return False
    return all(affine_dim(f.vertices) == n - 1 for f in lattice.facets)


def simpliciality_violations(lattice: FaceLattice) -> list:
    n = lattice.n
    return [
        f for f in lattice.faces if len(lattice.superfaces(f, f.dim + 1)) > n - f.dim
    ]


def _pyramid_volume(simplex, axes) -> Fraction:
    k = len(axes)
    rows = [[v[a] for a in axes] for v in simplex]
    return abs(det(rows)) / factorial(k)


def volumes(g: Germ, lattice: Optional[FaceLattice] = None) -> list:
    """[V_1, ..., V_n]: k-volumes of Gamma_-(f) cut by k-dim coordinate planes."""
    from .subdivision import triangulate_face

    _require_convenient(g)
    lattice = lattice or compact_faces(g)
    n = g.n
    out = []
    for k in range(1, n + 1):
        total = Fraction(0)
        for axes in itertools.combinations(range(n), k):
            off = set(range(n)) - set(axes)
            for f in lattice.of_dim(k - 1):
                if off <= f.zero_axes and not (set(axes) & f.zero_axes):
                    for simplex in triangulate_face(lattice, f):
                        total += _pyramid_volume(simplex, axes)
        out.append(total)
    return out


def milnor_kouchnirenko(g: Germ, lattice: Optional[FaceLattice] = None) -> int:
    """mu = n! V_n - (n-1)! V_{n-1} + ... + (-1)^(n-1) 1! V_1 + (-1)^n."""
    vols = volumes(g, lattice)
    n = g.n
    total = Fraction((-1) ** n)
    for k in range(1, n + 1):
        total += (-1) ** (n - k) * factorial(k) * vols[k - 1]
    if total.denominator != 1:
        raise GeometryError(f"non-integral Kouchnirenko number {total}")
    return int(total)
