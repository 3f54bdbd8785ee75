"""Polynomials in t with rational exponents and integer coefficients."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


class FracPoly:
    """Sum of c * t^e with e rational, c integer.  Zero terms are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        acc: dict = defaultdict(int)
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                acc[Fraction(e)] += c
        self.terms = {e: c for e, c in sorted(acc.items()) if c != 0}

    @classmethod
    def monomial(cls, e: Number, c: int = 1) -> "FracPoly":
        return cls({e: c})

    @classmethod
    def from_exponents(cls, exps: Iterable[Number]) -> "FracPoly":
        return cls((e, 1) for e in exps)

    @classmethod
    def one_minus_t_power(cls, k: int) -> "FracPoly":
        """(1 - t)^k for k >= 0."""
        out = cls({0: 1})
        base = cls({0: 1, 1: -1})
        for _ in range(k):
            out = out * base
        return out

    def __add__(self, other: "FracPoly") -> "FracPoly":
        return FracPoly(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "FracPoly":
        return FracPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "FracPoly") -> "FracPoly":
        return self + (-other)

    def __mul__(self, other) -> "FracPoly":
        if isinstance(other, int):
            return FracPoly({e: c * other for e, c in self.terms.items()})
        acc: dict = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[e1 + e2] += c1 * c2
        return FracPoly(acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = FracPoly({0: other})
        return isinstance(other, FracPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "FracPoly(0)"
        parts = [f"{c}*t^{e}" for e, c in self.terms.items()]
        return "FracPoly(" + " + ".join(parts) + ")"

    def shift(self, k: Number) -> "FracPoly":
        """Multiply by t^k."""
        return FracPoly({e + k: c for e, c in self.terms.items()})

    def reflect(self, degree: Number) -> "FracPoly":
        """t^degree * p(1/t)."""
        return FracPoly({degree - e: c for e, c in self.terms.items()})

    def at_one(self) -> int:
        return sum(self.terms.values())

    def coefficient(self, e: Number) -> int:
        return self.terms.get(Fraction(e), 0)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def is_palindromic(self, degree: Number) -> bool:
        return self == self.reflect(degree)

    def filter(self, pred) -> "FracPoly":
        return FracPoly({e: c for e, c in self.terms.items() if pred(e)})

    def truncate(self, max_degree: Number) -> "FracPoly":
        return self.filter(lambda e: e <= max_degree)

    def divide_one_minus_t_power(self, a: Number, max_degree: Number) -> "FracPoly":
        """self / (1 - t^a) as a geometric series, truncated above ``max_degree``."""
        a = Fraction(a)
        acc: dict = defaultdict(int)
        for e, c in self.terms.items():
            x = e
            while x <= max_degree:
                acc[x] += c
                x += a
        return FracPoly(acc)

    def items(self):
        return self.terms.items()
