"""
Two-variable elimination oracle

For n = 2 the eigen-equations f_i(x) = lambda g_i(x) have a common lambda
exactly when f1 g2 - f2 g1 = 0. On the chart x = (1, z) this is a univariate
polynomial of degree m + m' - 2; missing degrees are roots at x = (0, 1).
"""

from typing import List, Tuple

import numpy as np

from src.oracles.residual import contract_by_loops
from src.tensors.dense import DenseTensor
from src.utils.errors import InputError

LEADING_TOL = 1e-12


def _cross(A: DenseTensor, B: DenseTensor, k: int, x: np.ndarray) -> complex:
    f = contract_by_loops(A, k, x)
    g = contract_by_loops(B, 1, x)
    return f[0] * g[1] - f[1] * g[0]


def _eigenvalue(A: DenseTensor, B: DenseTensor, k: int, x: np.ndarray):
    f = contract_by_loops(A, k, x)
    g = contract_by_loops(B, 1, x)
    i = int(np.argmax(np.abs(g)))
    if abs(g[i]) <= LEADING_TOL:
        return None
    return complex(f[i] / g[i])


def two_var_oracle(A: DenseTensor, B: DenseTensor, k: int = 1) -> List[Tuple[complex, np.ndarray]]:
    """
    One (lambda, x) per equivalence class of a 2-dimensional problem

    For m != m' each x is scaled to B x^(m') = 1 with principal roots.
    """
    if A.dim != 2 or B.dim != 2:
        raise InputError("two_var_oracle needs n = 2")
    m, mprime = A.order, B.order
    degree = m + mprime - 2
    samples = degree + 1
    nodes = np.exp(2j * np.pi * np.arange(samples) / samples)
    values = np.array([_cross(A, B, k, np.array([1.0, z])) for z in nodes])
    coeffs = np.fft.fft(values) / samples

    scale = max(1.0, float(np.max(np.abs(coeffs))))
    top = degree
    while top > 0 and abs(coeffs[top]) <= LEADING_TOL * scale:
        top -= 1
    points = [np.array([1.0, z], dtype=complex) for z in np.polynomial.polynomial.polyroots(coeffs[: top + 1])] if top > 0 else []
    # roots lost from the (1, z) chart sit at (0, 1)
    points.extend(np.array([0.0, 1.0], dtype=complex) for _ in range(degree - top))

    out = []
    for x in points:
        lam = _eigenvalue(A, B, k, x)
        if lam is None:
            continue
        if m != mprime:
            beta = complex(x @ contract_by_loops(B, 1, x))
            if abs(beta) > LEADING_TOL:
                r = beta ** (1.0 / mprime)
                x = x / r
                lam = lam / r ** (m - mprime)
        out.append((lam, x))
    return out
