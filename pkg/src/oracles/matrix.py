"""
Dense generalized-eigenvalue oracle for the matrix case m = m' = 2
"""

from typing import List, Union

import numpy as np
import scipy.linalg

from src.tensors.dense import DenseTensor
from src.utils.errors import InputError

MatrixLike = Union[np.ndarray, DenseTensor]


def _as_matrix(M: MatrixLike) -> np.ndarray:
    if isinstance(M, DenseTensor):
        if M.order != 2:
            raise InputError(f"Expected an order-2 tensor, got order {M.order}")
        return np.asarray(M.entries)
    arr = np.asarray(M, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InputError(f"Expected a square matrix, got shape {arr.shape}")
    return arr


def matrix_eig_oracle(A: MatrixLike, B: MatrixLike) -> List[complex]:
    """Eigenvalues of the pencil (A, B), sorted by (real, imag)"""
    a = _as_matrix(A)
    b = _as_matrix(B)
    if a.shape != b.shape:
        raise InputError(f"Pencil shapes differ: {a.shape} vs {b.shape}")
    if np.linalg.matrix_rank(b) < b.shape[0]:
        raise InputError("B is singular")
    values = scipy.linalg.eigvals(a, b)
    return sorted((complex(v) for v in values), key=lambda v: (v.real, v.imag))
