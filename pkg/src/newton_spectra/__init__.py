"""Milnor numbers, monomial bases, mixed Hodge numbers and spectral pairs of
convenient Newton non-degenerate germs with simplicial Newton boundary."""

from .basis import BasisElement, BasisError, CopyInfo, SimplicialityError, build_basis
from .cells import HalfOpenCell, canonical_copy, half_open_cell
from .danilov import cross_check, danilov_hodge_numbers, poincare_cone, poincare_evaluation
from .geometry import Face, FaceLattice, compact_faces, is_simplicial, milnor_kouchnirenko, volumes
from .germ import Germ, GermError, NotConvenientError, format_germ, is_convenient, parse_germ
from .hodge import HodgeClass, classify, hodge_table, spectral_pairs, verify_symmetries
from .oracle import milnor_oracle, nondegeneracy_check, volume_count_oracle
from .pipeline import ComputationResult, compute
from .spp import SpectralPairs, diff_spp, emit_spp, parse_spp_text
from .subdivision import Subdivision, WeightFunction, locate_and_evaluate, triangulate, weight_function

__version__ = "0.1.0"

__all__ = [
    "BasisElement", "BasisError", "CopyInfo", "SimplicialityError", "build_basis",
    "HalfOpenCell", "canonical_copy", "half_open_cell",
    "cross_check", "danilov_hodge_numbers", "poincare_cone", "poincare_evaluation",
    "Face", "FaceLattice", "compact_faces", "is_simplicial", "milnor_kouchnirenko", "volumes",
    "Germ", "GermError", "NotConvenientError", "format_germ", "is_convenient", "parse_germ",
    "HodgeClass", "classify", "hodge_table", "spectral_pairs", "verify_symmetries",
    "milnor_oracle", "nondegeneracy_check", "volume_count_oracle",
    "ComputationResult", "compute",
    "SpectralPairs", "diff_spp", "emit_spp", "parse_spp_text",
    "Subdivision", "WeightFunction", "locate_and_evaluate", "triangulate", "weight_function",
]
