"""Lattice points of half-open parallelepipeds spanned by simplex cones."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._linalg import det, independent_rows, rank, solve, vsub


class CellError(ValueError):
    pass


@dataclass(frozen=True)
class HalfOpenCell:
    """Points sum b_i v_i with 0 <= b_i < 1, together with their coefficients."""

    generators: tuple
    points: tuple  # ExponentVectors
    coefficients: tuple  # matching tuples of Fractions

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _coordinate_ranges(generators, coords):
    ranges = []
    for c in coords:
        lo = sum(min(0, v[c]) for v in generators)
        hi = sum(max(0, v[c]) for v in generators)
        ranges.append(range(lo, hi + 1))
    return ranges


def half_open_cell(generators: Sequence[Sequence[int]]) -> HalfOpenCell:
    """Enumerate Z^n inside {sum b_i v_i : 0 <= b_i < 1} exactly.

    The generators may span a proper subspace (cones over lower faces); the
    scan then runs over a set of coordinates on which they are independent.
    """
    gens = tuple(tuple(int(x) for x in v) for v in generators)
    k = len(gens)
    if k == 0:
        return HalfOpenCell((), (), ())
    n = len(gens[0])
    if rank(gens) != k:
        raise CellError(f"singular generator matrix {gens}")
    coords = independent_rows(gens)
    # rows of the k x k system: for each chosen coordinate c, sum_i b_i v_i[c]
    system = [[v[c] for v in gens] for c in coords]
    inverse_cols = [solve(system, [1 if r == j else 0 for r in range(k)]) for j in range(k)]
    points = []
    coeffs = []
    for sub in itertools.product(*_coordinate_ranges(gens, coords)):
        b = tuple(sum(inverse_cols[j][i] * sub[j] for j in range(k)) for i in range(k))
        if not all(0 <= x < 1 for x in b):
            continue
        full = tuple(sum(b[i] * gens[i][c] for i in range(k)) for c in range(n))
        if all(Fraction(x).denominator == 1 for x in full):
            points.append(tuple(int(x) for x in full))
            coeffs.append(b)
    order = sorted(range(len(points)), key=lambda i: points[i])
    return HalfOpenCell(gens, tuple(points[i] for i in order), tuple(coeffs[i] for i in order))


def normalized_volume(generators: Sequence[Sequence[int]]) -> int:
    """Index of the lattice spanned by the generators inside its saturation.

    Equals |det| for full-rank square input; equals the number of points in
    the half-open cell in general.
    """
    gens = [tuple(v) for v in generators]
    k = len(gens)
    n = len(gens[0])
    if k == n:
        return abs(int(det(gens)))
    return len(half_open_cell(gens))


def canonical_copy(vertices: Sequence[Sequence[int]], point: Sequence[int]) -> tuple:
    """Reflection of ``point`` through the centre of the cell: sum v_i - point."""
    total = tuple(sum(col) for col in zip(*vertices))
    out = vsub(total, point)
    if any(x < 0 for x in out):
        raise CellError(f"canonical copy of {tuple(point)} has a negative coordinate: {out}")
    return out
