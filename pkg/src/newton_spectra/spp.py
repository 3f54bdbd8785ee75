"""Spectral-pair multisets and their ``((a/b,w),m)`` text form."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping


class SppParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class SpectralPairs:
    """Multiset {(alpha, w): m}.  Zero multiplicities are never stored."""

    entries: Counter = field(default_factory=Counter)

    def __post_init__(self):
        clean = Counter()
        for (a, w), m in dict(self.entries).items():
            if m:
                clean[(Fraction(a), int(w))] += m
        self.entries = Counter({k: v for k, v in clean.items() if v})

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "SpectralPairs":
        return cls(Counter((Fraction(a), int(w)) for a, w in pairs))

    def __eq__(self, other) -> bool:
        return isinstance(other, SpectralPairs) and self.entries == other.entries

    def __len__(self) -> int:
        return len(self.entries)

    def total(self) -> int:
        return sum(self.entries.values())

    def items(self) -> list:
        """Entries ordered by ascending alpha, then descending w."""
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], -kv[0][1]))

    def reflected(self, n: int) -> "SpectralPairs":
        return SpectralPairs(Counter({(n - 2 - a, 2 * n - 2 - w): m for (a, w), m in self.entries.items()}))

    def is_symmetric(self, n: int) -> bool:
        return self.reflected(n) == self

    def to_json(self) -> list:
        return [{"alpha": frac_str(a), "w": w, "m": m} for (a, w), m in self.items()]


def emit_spp(sp: SpectralPairs) -> str:
    return ",".join(f"(({frac_str(a)},{w}),{m})" for (a, w), m in sp.items())


_TUPLE = re.compile(r"\(\(\s*(-?\d+(?:\s*/\s*\d+)?)\s*,\s*(-?\d+)\s*\)\s*,\s*(\d+)\s*\)")


def parse_spp_text(text: str) -> SpectralPairs:
    """Parse comma-separated ``((a/b,w),m)`` tuples; repeated keys are summed."""
    entries: Counter = Counter()
    pos = 0
    n = len(text)

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    pos = skip_ws(pos)
    first = True
    while pos < n:
        if not first:
            if text[pos] != ",":
                raise SppParseError("expected ','", pos)
            pos = skip_ws(pos + 1)
        m = _TUPLE.match(text, pos)
        if m is None:
            raise SppParseError("malformed spectral pair tuple", pos)
        alpha = Fraction(m.group(1).replace(" ", ""))
        entries[(alpha, int(m.group(2)))] += int(m.group(3))
        pos = skip_ws(m.end())
        first = False
        if pos < n and text[pos] == ".":
            pos = skip_ws(pos + 1)
    return SpectralPairs(entries)


@dataclass(frozen=True)
class SppDiff:
    surplus: Mapping  # in computed, missing from reference
    missing: Mapping  # in reference, missing from computed

    def __bool__(self) -> bool:
        return bool(self.surplus or self.missing)

    def lines(self) -> list:
        out = [f"+(({frac_str(a)},{w}),{m})" for (a, w), m in sorted(self.surplus.items())]
        out += [f"-(({frac_str(a)},{w}),{m})" for (a, w), m in sorted(self.missing.items())]
        return out


def diff_spp(computed: SpectralPairs, reference: SpectralPairs) -> SppDiff:
    """Signed multiset difference; falsy when the two agree exactly."""
    return SppDiff(
        surplus=dict(computed.entries - reference.entries),
        missing=dict(reference.entries - computed.entries),
    )
