"""Hodge indices (p, q, chi) of basis elements and the spectral pairs they give.

The weight of an element comes from its Hodge string: position j of a string
of length L is at Hodge level center + L - 1 - 2j, with center n - 1 for
non-integral h and n for integral h.  The Hodge filtration index follows from
writing the spectral number alpha = h - 1 as n - 1 - p - beta, 0 <= beta < 1.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .basis import BasisElement
from .spp import SpectralPairs, frac_str
from .subdivision import Subdivision, WeightFunction, locate_and_evaluate


class ClassificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class HodgeClass:
    p: int
    q: int
    chi: Fraction  # eigenvalue exp(-2 pi i chi); 0 means chi = 1
    w: int  # weight index of the spectral pair
    alpha: Fraction

    @property
    def pair(self) -> tuple:
        return (self.alpha, self.w)


def hodge_class(h: Fraction, n: int, length: int, position: int) -> HodgeClass:
    """Hodge data for level h at ``position`` of a string of ``length``."""
    h = Fraction(h)
    chi = h - math.floor(h)
    level = (n if chi == 0 else n - 1) + length - 1 - 2 * position
    p = math.floor(n - h)
    alpha = h - 1
    if chi == 0:
        return HodgeClass(p, level - p, chi, level - 1, alpha)
    return HodgeClass(p, level - p, chi, level, alpha)


def classify(
    e: BasisElement,
    n: int,
    weights: Optional[WeightFunction] = None,
    subdivision: Optional[Subdivision] = None,
) -> HodgeClass:
    """Classify one basis element; re-evaluates h when the subdivision is given."""
    if weights is not None and subdivision is not None:
        _, h = locate_and_evaluate(weights, subdivision, e.point)
        if h != e.h:
            raise ClassificationError(f"element {e.point}: stored h {e.h} but h evaluates to {h}")
    if e.string_length < 1 or not 0 <= e.position < e.string_length:
        raise ClassificationError(f"element {e.point} has no valid string placement: {e}")
    c = hodge_class(e.h, n, e.string_length, e.position)
    if not (0 <= c.p <= n and 0 <= c.q <= n):
        raise ClassificationError(f"element {e.point} (face {e.copy.source}) classified out of range: {c}")
    return c


def spectral_pairs(classes: Iterable[HodgeClass]) -> SpectralPairs:
    return SpectralPairs(Counter(c.pair for c in classes))


def hodge_table(classes: Iterable[HodgeClass]) -> Counter:
    """Counter {(p, q, chi): h^{p,q}_chi}."""
    return Counter((c.p, c.q, c.chi) for c in classes)


def table_to_json(table: Mapping) -> list:
    return [
        {"p": p, "q": q, "chi": frac_str(chi), "dim": d}
        for (p, q, chi), d in sorted(table.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))
        if d
    ]


@dataclass
class SymmetryReport:
    spp_symmetric: bool
    hodge_symmetric: bool
    total_ok: bool
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.spp_symmetric and self.hodge_symmetric and self.total_ok


def _partner(key, n):
    p, q, chi = key
    if chi == 0:
        return (n - p, n - q, chi)
    return (n - 1 - p, n - 1 - q, 1 - chi)


def verify_symmetries(sp: SpectralPairs, table: Mapping, n: int, mu: Optional[int] = None) -> SymmetryReport:
    """Pair symmetry (alpha, w) -> (n-2-alpha, 2n-2-w), Hodge symmetry, and sum = mu."""
    reflected = sp.reflected(n)
    spp_bad = [
        ("spp", key, sp.entries.get(key, 0), reflected.entries.get(key, 0))
        for key in sorted(set(sp.entries) | set(reflected.entries))
        if sp.entries.get(key, 0) != reflected.entries.get(key, 0)
    ]
    hodge_bad = [
        ("hodge", key, d, table.get(_partner(key, n), 0))
        for key, d in sorted(table.items())
        if d != table.get(_partner(key, n), 0)
    ]
    bad = spp_bad + hodge_bad
    total = sum(table.values())
    total_ok = total == sp.total() and (mu is None or total == mu)
    if not total_ok:
        bad.append(("total", mu, sp.total(), total))
    return SymmetryReport(not spp_bad, not hodge_bad, total_ok, bad)
