"""Polynomial germs: parsing, formatting and the convenience test.

Input grammar (both syntaxes may be mixed in one string)::

    germ      := sign? term (sign term)*
    sign      := "+" | "-"
    term      := coeff ("*"? monomial)? | monomial
    coeff     := INT ("/" INT)?
    monomial  := factor ("*"? factor)*
    factor    := VAR ("^" INT)?          caret syntax, any variable name
               | LETTER INT              compressed syntax, single-letter names

Variable names consist of letters and underscores.  ``x15y2`` therefore reads
as ``x^15*y^2`` and ``xyz`` as ``x*y*z``; multi-letter names need a caret.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

ExponentVector = tuple  # tuple[int, ...]


class GermError(ValueError):
    """Raised for malformed or inadmissible germ input."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotConvenientError(ValueError):
    def __init__(self, axes: Sequence[int], variables: Sequence[str] = ()):
        self.axes = tuple(axes)
        names = [variables[i] if i < len(variables) else f"x{i + 1}" for i in self.axes]
        super().__init__("not convenient: axis " + ", ".join(names))


@dataclass(frozen=True)
class Germ:
    """A polynomial germ with exact rational coefficients."""

    variables: tuple
    terms: Mapping[ExponentVector, Fraction]

    def __post_init__(self):
        n = len(self.variables)
        clean = {}
        for exp, c in self.terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise GermError(f"bad exponent vector {exp} for {n} variables")
            c = Fraction(c)
            if c != 0:
                clean[exp] = c
        if not clean:
            raise GermError("empty germ")
        if tuple([0] * n) in clean:
            raise GermError("germ has a constant term; it must vanish at the origin")
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))
        object.__setattr__(self, "variables", tuple(self.variables))

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def support(self) -> list:
        return list(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Germ):
            return NotImplemented
        return self.variables == other.variables and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    def derivative(self, i: int) -> dict:
        """Partial derivative with respect to the i-th variable, as a term dict."""
        out = {}
        for exp, c in self.terms.items():
            if exp[i] > 0:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = c * exp[i]
        return out

    def restrict(self, points: Iterable[ExponentVector]) -> dict:
        """The face polynomial: terms whose exponent lies in ``points``."""
        keep = set(points)
        return {e: c for e, c in self.terms.items() if e in keep}

    def __str__(self):
        return format_germ(self)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise GermError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


def _split_names(word: str, at: int, variables: Sequence[str]) -> list:
    """Split a run of letters into declared variable names, longest match first."""
    names = sorted(variables, key=len, reverse=True)
    out = []
    i = 0
    while i < len(word):
        for name in names:
            if word.startswith(name, i):
                out.append((name, at + i))
                i += len(name)
                break
        else:
            raise GermError(f"unknown variable in {word[i:]!r}", at + i)
    return out


def parse_germ(text: str, variables: Optional[Sequence[str]] = None) -> Germ:
    """Parse ``text`` into a :class:`Germ` over ``variables``.

    If ``variables`` is omitted they are inferred with :func:`infer_variables`.
    Like terms are combined and terms cancelling to zero are dropped.
    """
    if variables is None:
        variables = infer_variables(text)
    variables = tuple(variables)
    for v in variables:
        if not re.fullmatch(r"[A-Za-z_]+", v):
            raise GermError(f"invalid variable name {v!r}")
    index = {v: i for i, v in enumerate(variables)}
    tokens = _tokenize(text)
    if not tokens:
        raise GermError("empty input", 0)
    n = len(variables)
    terms: dict = {}
    k = 0

    def peek(kind=None, value=None):
        if k >= len(tokens):
            return None
        t = tokens[k]
        if kind and t[0] != kind:
            return None
        if value and t[1] != value:
            return None
        return t

    def expect_int(what):
        nonlocal k
        t = peek("num")
        if t is None:
            where = tokens[k][2] if k < len(tokens) else len(text)
            raise GermError(f"expected {what}", where)
        k += 1
        return int(t[1])

    first = True
    while k < len(tokens):
        sign = 1
        t = peek("op")
        if t and t[1] in "+-":
            sign = -1 if t[1] == "-" else 1
            k += 1
        elif not first:
            raise GermError(f"expected '+' or '-', got {tokens[k][1]!r}", tokens[k][2])
        first = False
        if k >= len(tokens):
            raise GermError("dangling sign at end of input", len(text))
        coeff = Fraction(1)
        exp = [0] * n
        seen_any = False
        if peek("num"):
            num = expect_int("coefficient")
            den = 1
            if peek("op", "/"):
                k += 1
                den = expect_int("denominator")
                if den == 0:
                    raise GermError("zero denominator", tokens[k - 1][2])
            coeff = Fraction(num, den)
            seen_any = True
            if peek("op", "*"):
                k += 1
                if not peek("name"):
                    where = tokens[k][2] if k < len(tokens) else len(text)
                    raise GermError("expected variable after '*'", where)
        while peek("name"):
            word, at = tokens[k][1], tokens[k][2]
            k += 1
            parts = _split_names(word, at, variables)
            for j, (name, _) in enumerate(parts):
                exp[index[name]] += 1
            last, last_at = parts[-1]
            power = None
            if peek("op", "^"):
                k += 1
                power = expect_int("exponent after '^'")
            elif peek("num"):
                if len(last) != 1:
                    raise GermError(
                        f"compressed exponent needs a single-letter variable, got {last!r}",
                        tokens[k][2],
                    )
                power = int(tokens[k][1])
                k += 1
            if power is not None:
                exp[index[last]] += power - 1
            seen_any = True
            if peek("op", "*"):
                k += 1
                if not peek("name"):
                    where = tokens[k][2] if k < len(tokens) else len(text)
                    raise GermError("expected variable after '*'", where)
        if not seen_any:
            raise GermError(f"unexpected token {tokens[k][1]!r}", tokens[k][2])
        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + sign * coeff
    terms = {e: c for e, c in terms.items() if c != 0}
    if not terms:
        raise GermError("germ is identically zero")
    if set(terms) == {tuple([0] * n)}:
        raise GermError("constant-only input")
    return Germ(variables, terms)


_PREFERRED = "xyzwuvst"


def infer_variables(text: str) -> tuple:
    """Single-letter variables used in ``text``, ordered x, y, z, w, ... first."""
    letters = set(re.findall(r"[A-Za-z_]", text))
    return tuple(sorted(letters, key=lambda c: (_PREFERRED.find(c) % 100 if c in _PREFERRED else 100, c)))


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(exp: ExponentVector, variables: Sequence[str], compressed: bool = False) -> str:
    """Render ``x^exp``; compressed style gives the terse ``x2y`` form."""
    parts = []
    for v, e in zip(variables, exp):
        if e == 0:
            continue
        if compressed:
            parts.append(v if e == 1 else f"{v}{e}")
        else:
            parts.append(v if e == 1 else f"{v}^{e}")
    if not parts:
        return "1"
    return "".join(parts) if compressed else "*".join(parts)


def format_germ(g: Germ) -> str:
    """Canonical caret-syntax rendering; ``parse_germ`` inverts it."""
    out = []
    for exp, c in g.terms.items():
        mono = format_monomial(exp, g.variables)
        mag = abs(c)
        body = mono if mag == 1 else f"{_coeff_str(mag)}*{mono}"
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    text = "".join(f"{s}{b}" for s, b in out)
    return text[1:] if text.startswith("+") else text


def missing_axes(g: Germ) -> list:
    """Axes i with no pure power x_i^k (k >= 1) in the support."""
    missing = []
    for i in range(g.n):
        if not any(e[i] > 0 and all(e[j] == 0 for j in range(g.n) if j != i) for e in g.terms):
            missing.append(i)
    return missing


def is_convenient(g: Germ) -> bool:
    """True iff every coordinate axis carries a pure power of the support.

    A pure power x_i^1 is a smooth (non-critical) germ; we still count it as
    convenient and leave the Milnor number to report 0.
    """
    return not missing_axes(g)
