"""
Eigen-residuals computed with plain index loops, independent of the tracker's contractions
"""

from itertools import product
from typing import Sequence, Tuple, Union

import numpy as np

from src.tensors.dense import DenseTensor


def contract_by_loops(A: DenseTensor, k: int, x: Sequence[complex]) -> np.ndarray:
    """A^(k) x^(m-1) by summing over every index tuple"""
    x = np.asarray(x, dtype=complex)
    entries = A.entries
    out = np.zeros(A.dim, dtype=complex)
    for index in product(range(A.dim), repeat=A.order):
        term = entries[index]
        if term == 0:
            continue
        for slot, i in enumerate(index):
            if slot != k - 1:
                term = term * x[i]
        out[index[k - 1]] += term
    return out


def residual_check(
    A: DenseTensor,
    B: DenseTensor,
    k: int,
    pair: Union[Tuple[complex, Sequence[complex]], object],
) -> float:
    """
    Infinity norm of A^(k) x^(m-1) - lambda B x^(m'-1)

    Args:
        pair: (lambda, x) tuple or any object with lam and x attributes
    """
    if isinstance(pair, tuple):
        lam, x = pair
    else:
        lam, x = pair.lam, pair.x
    lhs = contract_by_loops(A, k, x)
    rhs = complex(lam) * contract_by_loops(B, 1, x)
    return float(np.max(np.abs(lhs - rhs)))
