"""Small exact linear-algebra helpers over the rationals.

Matrices here are at most 4x4 or so (simplex generators, facet normals), so
plain Gaussian elimination on ``Fraction`` is the right tool.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Vector = tuple


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Sequence[int], v: Sequence[int]) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[int], v: Sequence[int]) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(k, v: Sequence) -> tuple:
    return tuple(k * a for a in v)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Optional[tuple]:
    """Solve the square system ``rows @ x = rhs``; ``None`` if singular."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return tuple(m[r][n] for r in range(n))


def rank(vectors: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def affine_dim(points: Sequence[Sequence[int]]) -> int:
    """Affine dimension of a point set (-1 for the empty set)."""
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    return rank([vsub(p, base) for p in pts[1:]]) if len(pts) > 1 else 0


def det(rows: Sequence[Sequence]) -> Fraction:
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        result *= m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return sign * result


def independent_rows(vectors: Sequence[Sequence[int]]) -> list[int]:
    """Indices of coordinates (columns) forming a maximal nonsingular minor.

    Given k linearly independent vectors in Q^n, returns k coordinate indices
    such that the k x k minor of the vectors restricted to them is invertible.
    """
    k = len(vectors)
    n = len(vectors[0])
    chosen: list[int] = []
    for j in range(n):
        trial = chosen + [j]
        sub = [[v[c] for c in trial] for v in vectors]
        # columns of the k x len(trial) matrix are independent iff rank grows
        cols = [[row[i] for row in sub] for i in range(len(trial))]
        if rank(cols) == len(trial):
            chosen = trial
            if len(chosen) == k:
                break
    return chosen


def gram_det(vectors: Sequence[Sequence[int]]) -> Fraction:
    """Gram determinant det(V V^T); its square root is the k-volume of the box."""
    return det([[dot(u, v) for v in vectors] for u in vectors])
