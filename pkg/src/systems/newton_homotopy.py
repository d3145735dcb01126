"""
Newton Homotopy Module
Real-valued homotopy P(lambda, x) - (1 - t) P(anchor) used to pull complex
representatives onto real eigenpairs
"""

from typing import Tuple

import numpy as np

from src.systems.parameters import STREAM_REAL, seeded_rng
from src.tensors.dense import DenseTensor, ModeContraction
from src.utils.errors import InputError


class NewtonHomotopySystem:
    """
    Square real system in (lambda, x) plus homotopy parameter t.

    The base P stacks the eigen-equations with a real hyperplane r.x + q = 0
    through the anchor, so the hyperplane row of P(anchor) vanishes.
    """

    def __init__(
        self,
        A: DenseTensor,
        B: DenseTensor,
        k: int,
        r: np.ndarray,
        q: float,
        anchor_lambda: float,
        anchor_x: np.ndarray,
    ):
        if A.dim != B.dim or np.size(r) != A.dim or np.size(anchor_x) != A.dim:
            raise InputError("Dimension mismatch in Newton homotopy construction")
        self.n = A.dim
        self.m = A.order
        self.mprime = B.order
        self.k = k
        self.r = np.asarray(r, dtype=float)
        self.q = float(q)
        self._a_mode = ModeContraction(DenseTensor(A.entries.real), k)
        self._b_mode = ModeContraction(DenseTensor(B.entries.real), 1)
        self.anchor = np.concatenate(([float(anchor_lambda)], np.asarray(anchor_x, dtype=float)))
        self.offset = self.base_evaluate(self.anchor[0], self.anchor[1:])

    def base_evaluate(self, lam: float, x: np.ndarray) -> np.ndarray:
        xc = np.asarray(x, dtype=complex)
        out = np.empty(self.n + 1)
        out[: self.n] = (self._a_mode.apply(xc) - lam * self._b_mode.apply(xc)).real
        out[self.n] = self.r @ x + self.q
        return out

    def base_jacobian(self, lam: float, x: np.ndarray) -> np.ndarray:
        xc = np.asarray(x, dtype=complex)
        fb, jb = self._b_mode.apply_and_jacobian(xc)
        ja = self._a_mode.jacobian(xc)
        jac = np.zeros((self.n + 1, self.n + 1))
        jac[: self.n, 0] = -fb.real
        jac[: self.n, 1:] = (ja - lam * jb).real
        jac[self.n, 1:] = self.r
        return jac

    def evaluate(self, lam: float, x: np.ndarray, t: float) -> np.ndarray:
        return self.base_evaluate(lam, x) - (1.0 - t) * self.offset

    def evaluate_y(self, y: np.ndarray) -> np.ndarray:
        """Evaluate at y = (lambda, x, t)"""
        return self.evaluate(y[0], y[1:-1], y[-1])

    def jacobian_y(self, y: np.ndarray) -> np.ndarray:
        """(n+1) x (n+2) Jacobian with respect to (lambda, x, t)"""
        jac = np.empty((self.n + 1, self.n + 2))
        jac[:, :-1] = self.base_jacobian(y[0], y[1:-1])
        jac[:, -1] = self.offset
        return jac

    def start_point(self) -> np.ndarray:
        return np.concatenate((self.anchor, [0.0]))


def build_newton_homotopy(
    A: DenseTensor,
    B: DenseTensor,
    k: int,
    anchor_lambda: float,
    anchor_x: np.ndarray,
    seed: int,
    salt: int = 0,
) -> NewtonHomotopySystem:
    """Resample a real hyperplane through Re(x*) and anchor the homotopy at (lambda*, Re(x*))"""
    rng = seeded_rng(seed, STREAM_REAL, salt)
    anchor_x = np.asarray(anchor_x, dtype=float)
    r = rng.standard_normal(A.dim)
    r /= np.linalg.norm(r)
    q = -float(r @ anchor_x)
    return NewtonHomotopySystem(A, B, k, r, q, anchor_lambda, anchor_x)


def eval_newton_homotopy(nh: NewtonHomotopySystem, lam: float, x: np.ndarray, t: float) -> np.ndarray:
    return nh.evaluate(float(lam), np.asarray(x, dtype=float), float(t))


def newton_homotopy_parts(nh: NewtonHomotopySystem, y: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return nh.evaluate_y(y), nh.jacobian_y(y)
