"""
Path result types
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

import numpy as np


class PathStatus(str, Enum):
    CONVERGED = "converged"
    AT_INFINITY = "at_infinity"
    FAILED = "failed"


class EndpointKind(str, Enum):
    REGULAR = "regular"
    SINGULAR_ISOLATED = "singular_isolated"
    POSITIVE_DIMENSIONAL = "positive_dimensional"


@dataclass
class PathResult:
    """Outcome of tracking one start root"""

    path_id: int
    endpoint: np.ndarray
    status: PathStatus
    residual: float = float("inf")
    cond_estimate: float = float("inf")
    steps_taken: int = 0
    retraced_projective: bool = False
    kind: Optional[EndpointKind] = None
    curve_jump: bool = False
    message: str = ""
    start: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def lam(self) -> complex:
        return complex(self.endpoint[0])

    @property
    def x(self) -> np.ndarray:
        return self.endpoint[1:]

    @property
    def converged(self) -> bool:
        return self.status == PathStatus.CONVERGED

    def with_updates(self, **changes) -> "PathResult":
        return replace(self, **changes)
