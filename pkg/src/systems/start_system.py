"""
Start System Module
Product-form start system with closed-form nonsingular roots
"""

from dataclasses import dataclass
from itertools import product
from typing import List

import numpy as np

from src.systems.parameters import STREAM_START, seeded_rng, unit_complex
from src.utils.errors import ConstructionError, InputError

MU_SEPARATION = 1e-3


@dataclass(frozen=True)
class StartSystem:
    """
    Q_i = (lambda - mu_i)(x_i^(m-1) - beta_i), i = 1..n
    Q_{n+1} = c.x + d
    """

    mu: np.ndarray
    beta: np.ndarray
    c: np.ndarray
    d: complex
    m: int

    @property
    def n(self) -> int:
        return self.mu.size

    @property
    def exponent(self) -> int:
        return self.m - 1

    def evaluate(self, u: np.ndarray) -> np.ndarray:
        return self.evaluate_with_jacobian(u)[0]

    def jacobian(self, u: np.ndarray) -> np.ndarray:
        return self.evaluate_with_jacobian(u)[1]

    def evaluate_with_jacobian(self, u: np.ndarray):
        lam, x = u[0], u[1:]
        e, n = self.exponent, self.n
        lin = lam - self.mu
        powered = x ** e
        value = np.empty(n + 1, dtype=complex)
        value[:n] = lin * (powered - self.beta)
        value[n] = self.c @ x + self.d
        jac = np.zeros((n + 1, n + 1), dtype=complex)
        jac[:n, 0] = powered - self.beta
        jac[np.arange(n), np.arange(1, n + 1)] = lin * e * x ** (e - 1)
        jac[n, 1:] = self.c
        return value, jac


def build_start_system(n: int, m: int, seed: int) -> StartSystem:
    """
    Draw unit-modulus start parameters; mu values are redrawn until pairwise separated

    Args:
        n: Tensor dimension
        m: Order whose exponent m-1 appears on the x-binomials
        seed: Non-negative seed
    """
    if n < 1 or m < 2:
        raise InputError(f"Invalid start system shape: n={n}, m={m}")
    rng = seeded_rng(seed, STREAM_START)
    while True:
        mu = unit_complex(rng, n)
        gaps = np.abs(mu[:, None] - mu[None, :]) + np.eye(n) * 10.0
        if n == 1 or np.min(gaps) >= MU_SEPARATION:
            break
    beta = unit_complex(rng, n)
    c = unit_complex(rng, n)
    d = complex(unit_complex(rng))
    return StartSystem(mu=mu, beta=beta, c=c, d=d, m=m)


def enumerate_start_solutions(Q: StartSystem) -> List[np.ndarray]:
    """
    All n(m-1)^(n-1) roots of Q as vectors u = (lambda, x)

    For lambda = mu_i every other x_j runs over the (m-1)-th roots of beta_j and
    x_i is solved from the linear equation.
    """
    e, n = Q.exponent, Q.n
    roots = [
        np.abs(b) ** (1.0 / e) * np.exp(1j * (np.angle(b) + 2 * np.pi * np.arange(e)) / e)
        for b in Q.beta
    ]
    solutions: List[np.ndarray] = []
    for i in range(n):
        if Q.c[i] == 0:
            raise ConstructionError(f"Hyperplane coefficient c_{i + 1} is zero")
        others = [j for j in range(n) if j != i]
        for choice in product(range(e), repeat=n - 1):
            x = np.zeros(n, dtype=complex)
            for j, r in zip(others, choice):
                x[j] = roots[j][r]
            x[i] = -(Q.d + Q.c @ x) / Q.c[i]
            u = np.empty(n + 1, dtype=complex)
            u[0] = Q.mu[i]
            u[1:] = x
            solutions.append(u)
    return solutions
