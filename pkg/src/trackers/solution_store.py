"""
Solution Store Module
Ordered index of path endpoints for near-duplicate and curve-jump detection
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from src.trackers.config import TrackerConfig
from src.trackers.results import PathResult


@dataclass(frozen=True)
class StoredSolution:
    solution_id: int
    point: np.ndarray
    cond: float

    @property
    def key(self) -> float:
        return float(self.point[0].real)


@dataclass(frozen=True)
class DuplicateCheck:
    """Outcome of a near-duplicate query"""

    is_new: bool
    duplicate_of: Optional[int] = None
    curve_jump: bool = False


class SolutionStore:
    """
    Endpoints sorted by Re(lambda).

    A query of radius tol scans the key window [key - tol, key + tol] found by
    binary search and filters it by infinity-norm distance, so it returns
    exactly the stored points within tol of the query.
    """

    def __init__(self):
        self._keys: List[float] = []
        self._items: List[StoredSolution] = []

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self):
        return iter(self._items)

    def insert(self, solution_id: int, point: np.ndarray, cond: float = 0.0) -> StoredSolution:
        item = StoredSolution(solution_id, np.asarray(point, dtype=complex), float(cond))
        pos = bisect_right(self._keys, item.key)
        self._keys.insert(pos, item.key)
        self._items.insert(pos, item)
        return item

    def near(self, point: np.ndarray, tol: float) -> List[StoredSolution]:
        """All stored points within tol of point in the infinity norm"""
        point = np.asarray(point, dtype=complex)
        key = float(point[0].real)
        lo = bisect_left(self._keys, key - tol)
        hi = bisect_right(self._keys, key + tol)
        return [
            item
            for item in self._items[lo:hi]
            if float(np.max(np.abs(item.point - point))) <= tol
        ]

    def nearest(self, point: np.ndarray, tol: float) -> Optional[StoredSolution]:
        hits = self.near(point, tol)
        if not hits:
            return None
        point = np.asarray(point, dtype=complex)
        return min(hits, key=lambda item: (float(np.max(np.abs(item.point - point))), item.solution_id))


def check_duplicate(
    store: SolutionStore,
    candidate: PathResult,
    cfg: TrackerConfig,
    insert: bool = True,
) -> DuplicateCheck:
    """
    Look up a converged endpoint among the stored ones

    Args:
        store: Store of earlier endpoints
        candidate: Converged path result
        cfg: Supplies duplicate_tol and cond_threshold
        insert: Insert the candidate when it is new

    Returns:
        DuplicateCheck; curve_jump is set when both condition estimates exceed the threshold
    """
    hit = store.nearest(candidate.endpoint, cfg.duplicate_tol)
    if hit is None:
        if insert:
            store.insert(candidate.path_id, candidate.endpoint, candidate.cond_estimate)
        return DuplicateCheck(is_new=True)
    jump = hit.cond > cfg.cond_threshold and candidate.cond_estimate > cfg.cond_threshold
    return DuplicateCheck(is_new=False, duplicate_of=hit.solution_id, curve_jump=jump)
