"""End-to-end computation for one germ."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .basis import BasisElement, SimplicialityError, build_basis, sort_key
from .danilov import cross_check, danilov_hodge_numbers
from .geometry import FaceLattice, compact_faces, is_simplicial, milnor_kouchnirenko
from .germ import Germ, format_germ, format_monomial, missing_axes, NotConvenientError
from .hodge import classify, hodge_table, spectral_pairs, table_to_json, verify_symmetries
from .local import LocalDecomposition
from .oracle import milnor_oracle, nondegeneracy_check, volume_count_oracle
from .spp import SpectralPairs, frac_str
from .subdivision import Subdivision, WeightFunction, triangulate, weight_function


class PreconditionError(ValueError):
    """Input is outside the supported class (exit status 3)."""


class ConsistencyError(RuntimeError):
    """Two routes that must agree did not (exit status 4)."""


@dataclass
class ComputationResult:
    germ: Germ
    lattice: FaceLattice
    subdivision: Subdivision
    weights: WeightFunction
    milnor: int
    basis: list
    classes: list
    spectral_pairs: SpectralPairs
    hodge: Counter
    diagnostics: dict = field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def n(self) -> int:
        return self.germ.n

    def basis_in_order(self) -> list:
        """(element, class) pairs in listing order: descending, last variable first."""
        pairs = sorted(zip(self.basis, self.classes), key=lambda ec: sort_key(ec[0].monomial), reverse=True)
        return pairs

    def to_json(self) -> dict:
        v = self.germ.variables
        return {
            "germ": format_germ(self.germ),
            "variables": list(v),
            "n": self.n,
            "milnor": self.milnor,
            "spectral_pairs": self.spectral_pairs.to_json(),
            "hodge_numbers": table_to_json(self.hodge),
            "basis": [
                {
                    "monomial": format_monomial(e.monomial, v, compressed=True),
                    "point": list(e.point),
                    "h": frac_str(e.h),
                    "owner": e.owner,
                    "face": [list(x) for x in e.copy.source],
                    "string_length": e.string_length,
                    "position": e.position,
                    "canonical": e.copy.canonical,
                    "fallback": e.copy.fallback,
                }
                for e, _ in self.basis_in_order()
            ],
            "diagnostics": self.diagnostics,
            "timing": {"total_ms": self.elapsed_ms},
        }


def _run_checks(g: Germ, lattice: FaceLattice, sub: Subdivision, result: "ComputationResult") -> dict:
    from .cells import half_open_cell
    from ._linalg import det

    checks = {}
    oracle = milnor_oracle(g, lattice=lattice)
    spectrum = Counter()
    for e in result.basis:
        spectrum[e.h] += 1
    checks["oracle_milnor"] = oracle.mu
    checks["oracle_cap"] = oracle.cap
    checks["oracle_levels_match"] = oracle.level_counts() == spectrum
    danilov = danilov_hodge_numbers(lattice)
    checks["danilov_match"] = cross_check(result.hodge, danilov).ok
    volumes_ok = True
    for s in sub.simplices:
        if len(s.vertices) == g.n:
            cell = len(half_open_cell(s.vertices))
            volumes_ok &= cell == abs(det(s.vertices)) == volume_count_oracle(s.vertices)
    checks["volume_identity"] = volumes_ok
    checks["ok"] = (
        oracle.mu == result.milnor
        and checks["oracle_levels_match"]
        and checks["danilov_match"]
        and volumes_ok
    )
    return checks


def compute(g: Germ, nondegeneracy: bool = True, check: bool = False) -> ComputationResult:
    """Run the full pipeline.

    Raises :class:`PreconditionError` for non-convenient, non-simplicial or
    degenerate input and :class:`ConsistencyError` when independent counts
    disagree.
    """
    start = time.perf_counter()
    missing = missing_axes(g)
    if missing:
        raise PreconditionError(str(NotConvenientError(missing, g.variables)))
    lattice = compact_faces(g)
    if not is_simplicial(lattice):
        raise PreconditionError("Newton boundary is not simplicial")
    diagnostics = {"convenient": True, "simplicial": True, "nondegenerate": None}
    if nondegeneracy:
        verdicts = nondegeneracy_check(g, lattice)
        diagnostics["face_verdicts"] = [
            {"face": [list(v) for v in fv.vertices], "nondegenerate": fv.nondegenerate} for fv in verdicts
        ]
        bad = [fv.vertices for fv in verdicts if not fv.nondegenerate]
        diagnostics["nondegenerate"] = not bad
        if bad:
            raise PreconditionError(f"degenerate on faces {bad}")
    sub = triangulate(lattice)
    weights = weight_function(sub)
    decomposition = LocalDecomposition(lattice)
    mu = milnor_kouchnirenko(g, lattice)
    diagnostics["kouchnirenko"] = mu
    try:
        basis = build_basis(g, lattice, sub, weights, decomposition)
    except SimplicialityError as exc:
        raise PreconditionError(str(exc)) from exc
    classes = [classify(e, g.n) for e in basis]
    sp = spectral_pairs(classes)
    table = hodge_table(classes)
    report = verify_symmetries(sp, table, g.n, mu)
    diagnostics["symmetries"] = report.ok
    if not report.ok:
        raise ConsistencyError(f"symmetry check failed: {report.counterexamples[:5]}")
    result = ComputationResult(g, lattice, sub, weights, mu, basis, classes, sp, table, diagnostics)
    if check:
        checks = _run_checks(g, lattice, sub, result)
        diagnostics["checks"] = checks
        if not checks["ok"]:
            raise ConsistencyError(f"cross-checks failed: {checks}")
    result.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return result
