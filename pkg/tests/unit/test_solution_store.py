"""
Tests for the endpoint store and duplicate detection
"""

import numpy as np
import pytest

from src.trackers.config import TrackerConfig
from src.trackers.results import EndpointKind, PathResult, PathStatus
from src.trackers.solution_store import SolutionStore, check_duplicate


def _result(pid, point, cond=10.0):
    return PathResult(
        pid, np.asarray(point, dtype=complex), PathStatus.CONVERGED, residual=0.0, cond_estimate=cond,
        kind=EndpointKind.REGULAR,
    )


def _linear_scan(points, query, tol):
    return sorted(i for i, p in enumerate(points) if np.max(np.abs(p - query)) <= tol)


class TestSolutionStore:
    def test_empty_store(self):
        store = SolutionStore()
        assert len(store) == 0
        assert store.nearest(np.zeros(3), 1.0) is None

    def test_near_matches_linear_scan(self):
        rng = np.random.default_rng(3)
        # clustered keys so the window holds many candidates
        points = [
            np.array([np.round(rng.random(), 1) + 1e-3 * rng.standard_normal(), *rng.random(2)], dtype=complex)
            for _ in range(200)
        ]
        store = SolutionStore()
        for i, p in enumerate(points):
            store.insert(i, p)
        for q in points[:40]:
            query = q + 0.02 * (rng.random(3) - 0.5)
            got = sorted(item.solution_id for item in store.near(query, 0.05))
            assert got == _linear_scan(points, query, 0.05)

    def test_nearest_prefers_closest(self):
        store = SolutionStore()
        store.insert(0, [1.0, 0.0])
        store.insert(1, [1.0 + 1e-7, 0.0])
        hit = store.nearest(np.array([1.0 + 9e-8, 0.0]), 1e-6)
        assert hit.solution_id == 1

    def test_imaginary_parts_count(self):
        store = SolutionStore()
        store.insert(0, [1.0, 0.0])
        assert store.near(np.array([1.0 + 1e-3j, 0.0]), 1e-6) == []


class TestCheckDuplicate:
    def test_new_then_duplicate(self):
        cfg = TrackerConfig()
        store = SolutionStore()
        first = check_duplicate(store, _result(0, [2.0, 1.0]), cfg)
        assert first.is_new
        assert len(store) == 1
        second = check_duplicate(store, _result(1, [2.0 + 1e-9, 1.0]), cfg)
        assert not second.is_new
        assert second.duplicate_of == 0
        assert not second.curve_jump
        assert len(store) == 1

    def test_curve_jump_needs_both_ill_conditioned(self):
        cfg = TrackerConfig()
        store = SolutionStore()
        check_duplicate(store, _result(0, [3.0, 1.0], cond=1e12), cfg)
        assert check_duplicate(store, _result(1, [3.0, 1.0], cond=1e12), cfg).curve_jump
        assert not check_duplicate(store, _result(2, [3.0, 1.0], cond=1e3), cfg).curve_jump

    def test_without_insert(self):
        store = SolutionStore()
        check_duplicate(store, _result(0, [1.0, 1.0]), TrackerConfig(), insert=False)
        assert len(store) == 0

    @pytest.mark.parametrize("offset", [1e-5, 1e-3])
    def test_outside_tolerance_is_new(self, offset):
        store = SolutionStore()
        cfg = TrackerConfig()
        check_duplicate(store, _result(0, [1.0, 1.0]), cfg)
        assert check_duplicate(store, _result(1, [1.0, 1.0 + offset]), cfg).is_new
