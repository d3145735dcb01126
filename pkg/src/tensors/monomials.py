"""
Monomial Form Module
Polynomial-form input for symmetric tensors
"""

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial, prod
from typing import Dict, Iterable, List, Tuple

import numpy as np

from src.tensors.dense import DenseTensor
from src.utils.errors import InputError

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class MonomialForm:
    """Homogeneous polynomial sum(coeff * x^alpha) with |alpha| = degree"""

    degree: int
    dim: int
    terms: Tuple[Tuple[complex, Exponent], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.degree < 2 or self.dim < 1:
            raise InputError(f"Invalid monomial form: degree={self.degree}, dim={self.dim}")
        merged: Dict[Exponent, complex] = {}
        for coeff, alpha in self.terms:
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != self.dim or any(a < 0 for a in alpha):
                raise InputError(f"Exponent {alpha} does not fit dimension {self.dim}")
            if sum(alpha) != self.degree:
                raise InputError(f"Exponent {alpha} does not sum to degree {self.degree}")
            merged[alpha] = merged.get(alpha, 0) + complex(coeff)
        object.__setattr__(
            self, "terms", tuple((c, a) for a, c in sorted(merged.items(), reverse=True))
        )

    @classmethod
    def from_terms(cls, degree: int, dim: int, terms: Iterable[Tuple[complex, Iterable[int]]]) -> "MonomialForm":
        return cls(degree, dim, tuple((c, tuple(a)) for c, a in terms))

    def evaluate(self, x: Iterable[complex]) -> complex:
        vec = np.asarray(x, dtype=complex)
        return complex(sum(c * np.prod(vec ** np.array(a)) for c, a in self.terms))

    def __len__(self) -> int:
        return len(self.terms)


def _index_tuple(alpha: Exponent) -> List[int]:
    base: List[int] = []
    for i, a in enumerate(alpha):
        base.extend([i] * a)
    return base


def from_monomials(f: MonomialForm) -> DenseTensor:
    """
    The unique symmetric tensor A with A x^m = f(x)

    Each coefficient is spread equally over the distinct index permutations of
    its exponent multiset, coeff * alpha! / m! per placement.
    """
    arr = np.zeros((f.dim,) * f.degree, dtype=complex)
    m_fact = factorial(f.degree)
    for coeff, alpha in f.terms:
        share = coeff * prod(factorial(a) for a in alpha) / m_fact
        for index in set(permutations(_index_tuple(alpha))):
            arr[index] += share
    return DenseTensor(arr)
