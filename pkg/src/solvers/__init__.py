"""
Solvers Package
"""

from .complex_solver import EigenSolver, canonical_member, component_key, eeig, normalize_pair, solve_eigenproblem, teig, teneig
from .consistency import match_multisets, mode_consistency_check, shared_eigenvector_check
from .counts import e_count, g_count, path_count, start_path_count, t_count
from .real_solver import (
    canonical_sign,
    extract_real_pair,
    extract_real_pairs,
    heig,
    merge_real_pairs,
    real_eigenvalues,
    rotate_imaginary_pair,
    rotation_applies,
    zeig,
)
from .results import EigenPair, EquivalenceClass, SolveReport, residual_bound

__all__ = [
    "EigenPair",
    "EigenSolver",
    "EquivalenceClass",
    "SolveReport",
    "canonical_member",
    "canonical_sign",
    "component_key",
    "e_count",
    "eeig",
    "extract_real_pair",
    "extract_real_pairs",
    "g_count",
    "heig",
    "match_multisets",
    "merge_real_pairs",
    "mode_consistency_check",
    "normalize_pair",
    "path_count",
    "real_eigenvalues",
    "residual_bound",
    "rotate_imaginary_pair",
    "rotation_applies",
    "shared_eigenvector_check",
    "solve_eigenproblem",
    "start_path_count",
    "t_count",
    "teig",
    "teneig",
    "zeig",
]
