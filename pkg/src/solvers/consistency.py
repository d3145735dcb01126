"""
Cross-mode consistency checks on computed eigenpairs
"""

from typing import List, Sequence, Tuple

import numpy as np

from src.solvers.results import EigenPair, residual_bound
from src.tensors.dense import DenseTensor, mode_k_apply, multilinear_form, transpose_kl


def match_multisets(values_a: Sequence[complex], values_b: Sequence[complex], tol: float = 1e-6) -> bool:
    """Greedy nearest matching of two multisets of numbers within tol"""
    if len(values_a) != len(values_b):
        return False
    remaining = list(values_b)
    for value in sorted(values_a, key=lambda v: (complex(v).real, complex(v).imag)):
        if not remaining:
            return False
        dists = [abs(complex(value) - complex(other)) for other in remaining]
        best = int(np.argmin(dists))
        if dists[best] > tol:
            return False
        remaining.pop(best)
    return True


def mode_consistency_check(
    A: DenseTensor,
    B: DenseTensor,
    pairs_k: Sequence[EigenPair],
    pairs_l: Sequence[EigenPair],
    k: int,
    l: int,
    tol: float = 1e-6,
) -> bool:
    """
    True iff every mode-k pair of A solves the mode-l problem of A with slots k, l
    swapped, and the eigenvalue multisets of pairs_k and pairs_l agree within tol

    For a tensor symmetric in slots k and l both spectra coincide; otherwise the
    second condition generally fails.
    """
    lo, hi = min(k, l), max(k, l)
    swapped = transpose_kl(A, lo, hi)
    degree = max(A.order, B.order)
    for pair in pairs_k:
        lhs = mode_k_apply(swapped, l, pair.x)
        rhs = pair.lam * mode_k_apply(B, 1, pair.x)
        if float(np.max(np.abs(lhs - rhs))) > residual_bound(pair.lam, pair.x, degree):
            return False
    return match_multisets([p.lam for p in pairs_k], [p.lam for p in pairs_l], tol)


def _same_direction(x: np.ndarray, y: np.ndarray, tol: float) -> bool:
    i0 = int(np.argmax(np.abs(x)))
    if abs(y[i0]) <= tol:
        return False
    return float(np.max(np.abs(x / x[i0] - y / y[i0]))) <= tol


def shared_eigenvector_check(
    B: DenseTensor,
    pairs_k: Sequence[EigenPair],
    pairs_l: Sequence[EigenPair],
    direction_tol: float = 1e-6,
    value_tol: float = 1e-8,
) -> List[Tuple[int, int, bool]]:
    """
    Pairs of two mode spectra that share an eigenvector up to scaling

    Returns:
        (index in pairs_k, index in pairs_l, eigenvalues agree) for every shared
        eigenvector with B x^(m') != 0; for m = m' the eigenvalues must agree
    """
    out = []
    for i, p in enumerate(pairs_k):
        if abs(multilinear_form(B, p.x)) <= 1e-12:
            continue
        for j, q in enumerate(pairs_l):
            if _same_direction(p.x, q.x, direction_tol):
                out.append((i, j, abs(p.lam - q.lam) <= value_tol * max(1.0, abs(p.lam))))
    return out
