"""
Homotopy Module
Log-time linear homotopy between the start and target systems, and its homogenization
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.systems.eigen_system import EigenSystem
from src.systems.parameters import STREAM_GAMMA, seeded_rng, unit_complex
from src.systems.start_system import StartSystem, build_start_system
from src.utils.errors import InputError


@dataclass(frozen=True)
class LinearHomotopy:
    """H(u, s) = (1 - e^s) * gamma * Q(u) + e^s * G(u), s in (-inf, 0]"""

    Q: StartSystem
    G: EigenSystem
    gamma: complex

    def __post_init__(self):
        if self.gamma == 0:
            raise InputError("gamma must be nonzero")
        if self.Q.n != self.G.n:
            raise InputError(f"Start system size {self.Q.n} does not match target size {self.G.n}")

    @property
    def n(self) -> int:
        return self.G.n

    def evaluate(self, u: np.ndarray, s: float) -> np.ndarray:
        if s == 0:
            return self.G.evaluate(u)
        t = np.exp(s)
        return (1.0 - t) * self.gamma * self.Q.evaluate(u) + t * self.G.evaluate(u)

    def jac_u(self, u: np.ndarray, s: float) -> np.ndarray:
        return self.evaluate_all(u, s)[1]

    def jac_s(self, u: np.ndarray, s: float) -> np.ndarray:
        return self.evaluate_all(u, s)[2]

    def evaluate_all(self, u: np.ndarray, s: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Value, u-Jacobian and s-derivative in one pass"""
        t = np.exp(s)
        q, dq = self.Q.evaluate_with_jacobian(u)
        g, dg = self.G.evaluate_with_jacobian(u)
        gq = self.gamma * q
        value = g if s == 0 else (1.0 - t) * gq + t * g
        jac = (1.0 - t) * self.gamma * dq + t * dg
        ds = t * (g - gq)
        return value, jac, ds


def build_linear_homotopy(G: EigenSystem, seed: int) -> LinearHomotopy:
    """Start system with exponent max(m, m') - 1 and a seeded gamma"""
    Q = build_start_system(G.n, G.degree, seed)
    gamma = complex(unit_complex(seeded_rng(seed, STREAM_GAMMA)))
    return LinearHomotopy(Q=Q, G=G, gamma=gamma)


def eval_H(h: LinearHomotopy, u: np.ndarray, s: float) -> np.ndarray:
    return h.evaluate(np.asarray(u, dtype=complex), s)


def jac_H_u(h: LinearHomotopy, u: np.ndarray, s: float) -> np.ndarray:
    return h.jac_u(np.asarray(u, dtype=complex), s)


def jac_H_s(h: LinearHomotopy, u: np.ndarray, s: float) -> np.ndarray:
    return h.jac_s(np.asarray(u, dtype=complex), s)


def _power(base: complex, p: int) -> complex:
    return base ** p if p > 0 else 1.0


def _dpower(base: complex, p: int) -> complex:
    """d/dbase of base**p"""
    return p * base ** (p - 1) if p > 0 else 0.0


class ProjectiveHomotopy:
    """
    Homogenization of LinearHomotopy in v = (lambda, x0, x1..xn).

    Every eigen component is raised to total degree D = max(m, m'), so
    (alpha*lambda, alpha*x^) is a root whenever (lambda, x^) is.
    """

    def __init__(self, h: LinearHomotopy):
        self.h = h
        self.n = h.n
        self.degree = h.G.degree
        self._pa = self.degree - (h.G.m - 1)
        self._pb = self.degree - h.G.mprime

    def embed(self, u: np.ndarray) -> np.ndarray:
        """Affine point to the x0 = 1 chart"""
        v = np.empty(self.n + 2, dtype=complex)
        v[0] = u[0]
        v[1] = 1.0
        v[2:] = u[1:]
        return v

    @staticmethod
    def dehomogenize(v: np.ndarray) -> np.ndarray:
        u = np.empty(v.size - 1, dtype=complex)
        u[0] = v[0] / v[1]
        u[1:] = v[2:] / v[1]
        return u

    def _target(self, v: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        G = self.h.G
        n = self.n
        lam, x0, x = v[0], v[1], v[2:]
        fa, ja = G.a_parts(x)
        fb, jb = G.b_parts(x)
        pa, pb = self._pa, self._pb
        value = np.empty(n + 1, dtype=complex)
        value[:n] = _power(x0, pa) * fa - lam * _power(x0, pb) * fb
        value[n] = G.plane.a @ x + G.plane.b * x0
        jac = np.zeros((n + 1, n + 2), dtype=complex)
        jac[:n, 0] = -_power(x0, pb) * fb
        jac[:n, 1] = _dpower(x0, pa) * fa - lam * _dpower(x0, pb) * fb
        jac[:n, 2:] = _power(x0, pa) * ja - lam * _power(x0, pb) * jb
        jac[n, 1] = G.plane.b
        jac[n, 2:] = G.plane.a
        return value, jac

    def _start(self, v: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        Q = self.h.Q
        n = self.n
        e = Q.exponent
        lam, x0, x = v[0], v[1], v[2:]
        lin = lam - Q.mu * x0
        binom = x ** e - Q.beta * x0 ** e
        value = np.empty(n + 1, dtype=complex)
        value[:n] = lin * binom
        value[n] = Q.c @ x + Q.d * x0
        jac = np.zeros((n + 1, n + 2), dtype=complex)
        jac[:n, 0] = binom
        jac[:n, 1] = -Q.mu * binom - lin * e * Q.beta * x0 ** (e - 1)
        jac[np.arange(n), np.arange(2, n + 2)] = lin * e * x ** (e - 1)
        jac[n, 1] = Q.d
        jac[n, 2:] = Q.c
        return value, jac

    def evaluate(self, v: np.ndarray, s: float) -> np.ndarray:
        return self.evaluate_all(v, s)[0]

    def evaluate_all(self, v: np.ndarray, s: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        t = np.exp(s)
        gamma = self.h.gamma
        q, dq = self._start(v)
        g, dg = self._target(v)
        gq = gamma * q
        value = g if s == 0 else (1.0 - t) * gq + t * g
        jac = (1.0 - t) * gamma * dq + t * dg
        ds = t * (g - gq)
        return value, jac, ds


def homogenize(h: LinearHomotopy) -> ProjectiveHomotopy:
    return ProjectiveHomotopy(h)
