"""Toric g-polynomials of intervals in the face poset of the Newton boundary.

The poset consists of the empty face (dimension -1) and the compact faces.
For Boolean intervals (simplices, simplicial links) every g-polynomial is 1;
the general recursion is only exercised by non-simplex faces.
"""

from __future__ import annotations

from functools import lru_cache

from .fracpoly import FracPoly
from .geometry import FaceLattice

EMPTY = ()


def _poly(coeffs: dict) -> FracPoly:
    return FracPoly(coeffs)


def _times_t_minus_one_power(p: FracPoly, k: int) -> FracPoly:
    q = FracPoly.one_minus_t_power(k)
    if k % 2:
        q = -q
    return p * q


class FacePoset:
    """Interval computations over the empty face plus the lattice faces."""

    def __init__(self, lattice: FaceLattice):
        self.lattice = lattice
        self.elements = [EMPTY] + [f.vertices for f in lattice.faces]
        self.dim = {EMPTY: -1}
        for f in lattice.faces:
            self.dim[f.vertices] = f.dim
        self._g = lru_cache(maxsize=None)(self._g_uncached)
        self._gdual = lru_cache(maxsize=None)(self._gdual_uncached)

    def leq(self, a, b) -> bool:
        return set(a) <= set(b)

    def between(self, a, b) -> list:
        return [z for z in self.elements if self.leq(a, z) and self.leq(z, b)]

    def g(self, a, b) -> FracPoly:
        """g-polynomial of the interval [a, b]."""
        return self._g(a, b)

    def g_dual(self, a, b) -> FracPoly:
        """g-polynomial of the order-dual interval [a, b]^*."""
        return self._gdual(a, b)

    @staticmethod
    def _truncate(h: FracPoly, r: int) -> FracPoly:
        top = (r - 1) // 2
        return _poly({i: h.coefficient(i) - h.coefficient(i - 1) for i in range(top + 1)})

    def _g_uncached(self, a, b) -> FracPoly:
        r = self.dim[b] - self.dim[a]
        if r == 0:
            return FracPoly({0: 1})
        h = FracPoly()
        for z in self.between(a, b):
            if z == b:
                continue
            rz = self.dim[z] - self.dim[a]
            h = h + _times_t_minus_one_power(self._g(a, z), r - 1 - rz)
        return self._truncate(h, r)

    def _gdual_uncached(self, a, b) -> FracPoly:
        r = self.dim[b] - self.dim[a]
        if r == 0:
            return FracPoly({0: 1})
        h = FracPoly()
        for z in self.between(a, b):
            if z == a:
                continue
            rz = self.dim[b] - self.dim[z]
            h = h + _times_t_minus_one_power(self._gdual(z, b), r - 1 - rz)
        return self._truncate(h, r)
