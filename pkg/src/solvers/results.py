"""
Eigenpair result types
"""

from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

import numpy as np

from src.trackers.results import EndpointKind


@dataclass
class EigenPair:
    """One eigenpair representative with its path bookkeeping"""

    lam: complex
    x: np.ndarray
    multiplicity: int = 1
    residual: float = 0.0
    classification: EndpointKind = EndpointKind.REGULAR
    is_real: bool = False
    component_id: Optional[int] = None
    normalized: bool = True
    cond: float = float("inf")
    path_ids: Tuple[int, ...] = field(default=(), repr=False)

    def __post_init__(self):
        self.lam = complex(self.lam)
        self.x = np.asarray(self.x, dtype=complex)

    @property
    def n(self) -> int:
        return self.x.size

    def sort_key(self) -> tuple:
        """(Re lambda, Im lambda, x lexicographic), rounded against last-digit noise"""
        parts = [round(self.lam.real, 10), round(self.lam.imag, 10)]
        for value in self.x:
            parts.extend((round(value.real, 10), round(value.imag, 10)))
        return tuple(parts)

    def with_updates(self, **changes) -> "EigenPair":
        return replace(self, **changes)


def residual_bound(lam: complex, x: np.ndarray, degree: int) -> float:
    """Largest acceptable eigen-residual: 1e-6 * max(1, |lambda|, |x|_inf^(degree-1))"""
    return 1e-6 * max(1.0, abs(lam), float(np.max(np.abs(x))) ** (degree - 1))


@dataclass
class EquivalenceClass:
    """
    A representative (lambda, x) and its orbit members (t^(m-m') lambda, t x), t^(m') = 1.

    For m = m' the orbit is a full scaling line and only the representative is listed.
    """

    representative: EigenPair
    m: int
    mprime: int

    @property
    def scaling_order(self) -> int:
        return self.mprime if self.m != self.mprime else 1

    def members(self) -> List[EigenPair]:
        rep = self.representative
        if self.m == self.mprime:
            return [rep]
        out = []
        for j in range(self.mprime):
            t = np.exp(2j * np.pi * j / self.mprime)
            out.append(rep.with_updates(lam=t ** (self.m - self.mprime) * rep.lam, x=t * rep.x))
        return out


@dataclass
class SolveReport:
    """All classes of one eigenproblem plus path bookkeeping"""

    classes: List[EquivalenceClass]
    m: int
    mprime: int
    n: int
    k: int
    seed: int
    path_count: int
    optimal_count: int
    paths_converged: int = 0
    paths_at_infinity: int = 0
    paths_failed: int = 0
    retraced: int = 0
    warnings: List[str] = field(default_factory=list)

    @property
    def pairs(self) -> List[EigenPair]:
        return [c.representative for c in self.classes]

    @property
    def is_complete(self) -> bool:
        return self.paths_failed == 0

    def bookkeeping_holds(self) -> bool:
        """Converged multiplicities plus at-infinity and failed paths add up to path_count"""
        total = sum(c.representative.multiplicity for c in self.classes)
        return total == self.paths_converged and (
            self.paths_converged + self.paths_at_infinity + self.paths_failed == self.path_count
        )

    def count_law_holds(self) -> bool:
        """Converged paths on isolated classes do not exceed the generic class count"""
        isolated = sum(p.multiplicity for p in self.pairs if p.classification != EndpointKind.POSITIVE_DIMENSIONAL)
        return isolated <= self.optimal_count
