"""
Eigen System Module
The augmented target system G(lambda, x): mode-k eigen-equations plus a random hyperplane
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from src.systems.parameters import STREAM_HYPERPLANE, seeded_rng, unit_complex
from src.tensors.dense import DenseTensor, ModeContraction, multilinear_form
from src.utils.errors import InputError


@dataclass(frozen=True)
class Hyperplane:
    """Affine equation a.x + b = 0"""

    a: np.ndarray
    b: complex

    def __post_init__(self):
        a = np.asarray(self.a, dtype=complex).reshape(-1)
        if a.size == 0 or not np.any(a):
            raise InputError("Hyperplane normal must be nonzero")
        a.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", complex(self.b))

    def evaluate(self, x: np.ndarray) -> complex:
        return complex(self.a @ x + self.b)

    def __len__(self) -> int:
        return self.a.size


class EigenSystem:
    """
    n+1 polynomials in u = (lambda, x1..xn):

        A^(k) x^(m-1) - lambda * B x^(m'-1)
        a.x + b
    """

    def __init__(self, A: DenseTensor, B: DenseTensor, k: int, plane: Hyperplane):
        if A.dim != B.dim or len(plane) != A.dim:
            raise InputError(
                f"Dimension mismatch: A.dim={A.dim}, B.dim={B.dim}, hyperplane={len(plane)}"
            )
        if not 1 <= k <= A.order:
            raise InputError(f"Mode {k} out of range 1..{A.order}")
        self.A = A
        self.B = B
        self.k = k
        self.plane = plane
        self._a_mode = ModeContraction(A, k)
        self._b_mode = ModeContraction(B, 1)
        self._coef_scale = max(1.0, A.max_abs(), B.max_abs())

    @property
    def m(self) -> int:
        return self.A.order

    @property
    def mprime(self) -> int:
        return self.B.order

    @property
    def n(self) -> int:
        return self.A.dim

    @property
    def degree(self) -> int:
        """Largest total degree among the eigen-equations"""
        return max(self.m, self.mprime)

    def a_apply(self, x: np.ndarray) -> np.ndarray:
        return self._a_mode.apply(x)

    def b_apply(self, x: np.ndarray) -> np.ndarray:
        return self._b_mode.apply(x)

    def a_parts(self, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return self._a_mode.apply_and_jacobian(x)

    def b_parts(self, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return self._b_mode.apply_and_jacobian(x)

    def b_form(self, x: np.ndarray) -> complex:
        """B x^(m')"""
        return complex(x @ self._b_mode.apply(x))

    def evaluate(self, u: np.ndarray) -> np.ndarray:
        lam, x = u[0], u[1:]
        out = np.empty(self.n + 1, dtype=complex)
        out[: self.n] = self.a_apply(x) - lam * self.b_apply(x)
        out[self.n] = self.plane.evaluate(x)
        return out

    def jacobian(self, u: np.ndarray) -> np.ndarray:
        return self.evaluate_with_jacobian(u)[1]

    def evaluate_with_jacobian(self, u: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        lam, x = u[0], u[1:]
        n = self.n
        fa, ja = self.a_parts(x)
        fb, jb = self.b_parts(x)
        value = np.empty(n + 1, dtype=complex)
        value[:n] = fa - lam * fb
        value[n] = self.plane.evaluate(x)
        jac = np.zeros((n + 1, n + 1), dtype=complex)
        jac[:n, 0] = -fb
        jac[:n, 1:] = ja - lam * jb
        jac[n, 1:] = self.plane.a
        return value, jac

    @property
    def coef_scale(self) -> float:
        """max(1, |A|max, |B|max)"""
        return self._coef_scale

    def row_scales(self, u: np.ndarray) -> np.ndarray:
        """
        Per-row magnitudes that residual tolerances are measured against

        Eigen rows grow linearly in lambda and with degree - 1 in x; the
        hyperplane row is linear in x.
        """
        lam_size = max(1.0, abs(complex(u[0])))
        x_size = max(1.0, float(np.max(np.abs(u[1:]))))
        scales = np.full(self.n + 1, self._coef_scale * lam_size * x_size ** (self.degree - 1))
        scales[self.n] = max(1.0, float(np.max(np.abs(self.plane.a)))) * x_size
        return scales

    def scaled_residual(self, u: np.ndarray, value: Optional[np.ndarray] = None) -> float:
        """Largest row residual relative to its row scale"""
        if value is None:
            value = self.evaluate(u)
        return float(np.max(np.abs(value) / self.row_scales(u)))

    def residual_scale(self, u: np.ndarray) -> float:
        """Largest row scale at u"""
        return float(np.max(self.row_scales(u)))

    def eigen_residual(self, lam: complex, x: np.ndarray) -> float:
        """Infinity norm of A^(k) x^(m-1) - lambda B x^(m'-1)"""
        return float(np.max(np.abs(self.a_apply(x) - lam * self.b_apply(x))))


def check_b_form(B: DenseTensor, trials: int = 3):
    """Reject B whose form B x^(m') vanishes identically"""
    rng = np.random.default_rng(0)
    scale = max(1.0, B.max_abs())
    for _ in range(trials):
        x = rng.standard_normal(B.dim) + 1j * rng.standard_normal(B.dim)
        if abs(multilinear_form(B, x)) > 1e-12 * scale:
            return
    raise InputError("B x^(m') is identically zero")


def build_eigen_system(A: DenseTensor, B: DenseTensor, k: int, seed: int) -> EigenSystem:
    """
    Build the augmented eigen-system with a seeded unit-modulus hyperplane

    Args:
        A: Tensor of order m
        B: Tensor of order m'
        k: 1-based mode
        seed: Non-negative seed

    Returns:
        EigenSystem, deterministic in (A, B, k, seed)
    """
    if A.dim != B.dim:
        raise InputError(f"Dimension mismatch: A.dim={A.dim}, B.dim={B.dim}")
    if not 1 <= k <= A.order:
        raise InputError(f"Mode {k} out of range 1..{A.order}")
    check_b_form(B)
    rng = seeded_rng(seed, STREAM_HYPERPLANE)
    plane = Hyperplane(unit_complex(rng, A.dim), complex(unit_complex(rng)))
    return EigenSystem(A, B, k, plane)


def eval_G(sys: EigenSystem, u: np.ndarray) -> np.ndarray:
    return sys.evaluate(np.asarray(u, dtype=complex))


def jac_G(sys: EigenSystem, u: np.ndarray) -> np.ndarray:
    return sys.jacobian(np.asarray(u, dtype=complex))
