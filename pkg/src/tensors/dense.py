"""
Dense Tensor Module
Row-major storage of order-m, dimension-n complex tensors and the contraction
primitives every polynomial evaluation is built on
"""

from typing import Dict, Iterable, Sequence, Tuple

import numpy as np

from src.utils.errors import InputError


class DenseTensor:
    """Immutable order-m, dimension-n complex tensor"""

    __slots__ = ("_entries",)

    def __init__(self, entries: np.ndarray):
        """
        Wrap an n x n x ... x n array

        Args:
            entries: Array with `order` axes of equal length `dim`
        """
        arr = np.array(entries, dtype=complex)
        if arr.ndim < 2:
            raise InputError(f"Tensor order must be at least 2, got {arr.ndim}")
        if len(set(arr.shape)) != 1 or arr.shape[0] < 1:
            raise InputError(f"All tensor axes must have the same positive length, got {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "_entries", arr)

    def __setattr__(self, key, value):
        raise AttributeError("DenseTensor is immutable")

    @classmethod
    def from_flat(cls, order: int, dim: int, flat: Sequence[complex]) -> "DenseTensor":
        """Build from a row-major flat list of dim**order entries"""
        if order < 2 or dim < 1:
            raise InputError(f"Invalid tensor shape: order={order}, dim={dim}")
        values = np.asarray(flat, dtype=complex)
        if values.size != dim ** order:
            raise InputError(
                f"Expected {dim ** order} entries for order {order}, dim {dim}; got {values.size}"
            )
        return cls(values.reshape((dim,) * order))

    @classmethod
    def from_entries(cls, order: int, dim: int, entries: Dict[Tuple[int, ...], complex]) -> "DenseTensor":
        """Build from a mapping of 1-based index tuples to values; all other entries are zero"""
        arr = np.zeros((dim,) * order, dtype=complex)
        for index, value in entries.items():
            if len(index) != order or any(i < 1 or i > dim for i in index):
                raise InputError(f"Index {index} out of range for order {order}, dim {dim}")
            arr[tuple(i - 1 for i in index)] = value
        return cls(arr)

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def order(self) -> int:
        return self._entries.ndim

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    def entry(self, *index: int) -> complex:
        """Entry at a 1-based index tuple"""
        return complex(self._entries[tuple(i - 1 for i in index)])

    def flat(self) -> np.ndarray:
        """Row-major flat copy of the entries"""
        return self._entries.reshape(-1).copy()

    def is_real(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self._entries.imag) <= tol))

    def scaled(self, alpha: complex) -> "DenseTensor":
        return DenseTensor(alpha * self._entries)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self._entries)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return self._entries.shape == other._entries.shape and bool(
            np.array_equal(self._entries, other._entries)
        )

    def __hash__(self):
        return hash((self._entries.shape, self._entries.tobytes()))

    def __repr__(self) -> str:
        return f"DenseTensor(order={self.order}, dim={self.dim})"


def _check_vector(A: DenseTensor, x: Iterable[complex]) -> np.ndarray:
    vec = np.asarray(x, dtype=complex).reshape(-1)
    if vec.size != A.dim:
        raise InputError(f"Vector length {vec.size} does not match tensor dimension {A.dim}")
    return vec


def _check_mode(A: DenseTensor, k: int):
    if not 1 <= k <= A.order:
        raise InputError(f"Mode {k} out of range 1..{A.order}")


def multilinear_form(A: DenseTensor, x: Iterable[complex]) -> complex:
    """Sum of A_{i1...im} x_{i1}...x_{im} over all index tuples"""
    vec = _check_vector(A, x)
    value = A.entries
    for _ in range(A.order):
        value = value @ vec
    return complex(value)


def mode_k_apply(A: DenseTensor, k: int, x: Iterable[complex]) -> np.ndarray:
    """
    Mode-k contraction A^(k) x^(m-1)

    Args:
        A: Tensor of order m
        k: 1-based mode left free
        x: Vector of length n

    Returns:
        Vector whose j-th entry sums A over index tuples with slot k fixed to j
    """
    _check_mode(A, k)
    vec = _check_vector(A, x)
    return ModeContraction(A, k).apply(vec)


def mode_k_jacobian(A: DenseTensor, k: int, x: Iterable[complex]) -> np.ndarray:
    """Analytic Jacobian of mode_k_apply with respect to x"""
    _check_mode(A, k)
    vec = _check_vector(A, x)
    return ModeContraction(A, k).jacobian(vec)


def transpose_kl(A: DenseTensor, k: int, l: int) -> DenseTensor:
    """The <k,l> transpose: slots k and l swapped"""
    if not 1 <= k < l <= A.order:
        raise InputError(f"Transpose needs 1 <= k < l <= {A.order}, got k={k}, l={l}")
    return DenseTensor(np.swapaxes(A.entries, k - 1, l - 1))


def identity_tensor(m: int, n: int) -> DenseTensor:
    """The identity tensor whose mode-1 contraction is the componentwise (m-1)-th power"""
    if m < 2 or n < 1:
        raise InputError(f"Invalid identity tensor shape: m={m}, n={n}")
    arr = np.zeros((n,) * m, dtype=complex)
    for i in range(n):
        arr[(i,) * m] = 1.0
    return DenseTensor(arr)


def is_symmetric(A: DenseTensor, tol: float = 0.0) -> bool:
    """True when A is invariant under every <k,l> transpose"""
    for k in range(1, A.order):
        swapped = np.swapaxes(A.entries, 0, k)
        if np.max(np.abs(swapped - A.entries)) > tol:
            return False
    return True


class ModeContraction:
    """
    Precomputed axis layouts for repeated mode-k contractions of one tensor.

    Path tracking evaluates the same contraction thousands of times, so the
    moved copies are built once per tensor and mode.
    """

    def __init__(self, A: DenseTensor, k: int):
        _check_mode(A, k)
        self.order = A.order
        self.dim = A.dim
        base = np.moveaxis(A.entries, k - 1, 0)
        self._base = np.ascontiguousarray(base)
        # one layout per trailing slot, with that slot moved next to the free one
        self._slots = [
            np.ascontiguousarray(np.moveaxis(base, s, 1)) for s in range(1, self.order)
        ]

    def apply(self, x: np.ndarray) -> np.ndarray:
        value = self._base
        for _ in range(self.order - 1):
            value = value @ x
        return np.asarray(value, dtype=complex)

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        jac = np.zeros((self.dim, self.dim), dtype=complex)
        for layout in self._slots:
            value = layout
            for _ in range(self.order - 2):
                value = value @ x
            jac += value
        return jac

    def apply_and_jacobian(self, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return self.apply(x), self.jacobian(x)
