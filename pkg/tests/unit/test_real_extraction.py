"""
Tests for real eigenpair extraction and the Z-/H-eigenpair drivers
"""

import numpy as np
import pytest

from src.oracles import residual_check
from src.solvers.complex_solver import solve_eigenproblem
from src.solvers.real_solver import (
    canonical_sign,
    extract_real_pair,
    extract_real_pairs,
    heig,
    merge_real_pairs,
    real_eigenvalues,
    rotate_imaginary_pair,
    rotation_applies,
    zeig,
)
from src.solvers.results import EigenPair, EquivalenceClass, SolveReport
from src.systems.eigen_system import build_eigen_system
from src.tensors.dense import DenseTensor, identity_tensor
from src.trackers.results import EndpointKind


@pytest.fixture
def quintic_scalar():
    """n = 1, m = 5, m' = 4: the class of (3i, i) contains the real pairs (3, 1) and (-3, -1)"""
    return DenseTensor(np.full((1,) * 5, 3.0)), DenseTensor(np.ones((1,) * 4))


class TestRealEigenvalues:
    def test_threshold(self):
        pairs = [EigenPair(3 + 1e-12j, np.ones(2)), EigenPair(3 + 1e-3j, np.ones(2)), EigenPair(-1.0, np.ones(2))]
        assert real_eigenvalues(pairs) == pytest.approx([-1.0, 3.0])

    def test_custom_threshold(self):
        assert real_eigenvalues([EigenPair(3 + 1e-3j, np.ones(2))], delta0=1e-2) == pytest.approx([3.0])

    def test_rotation_emits_both_signs(self):
        pairs = [EigenPair(2j, np.ones(1))]
        assert real_eigenvalues(pairs, m=5, mprime=4) == pytest.approx([-2.0, 2.0])
        assert real_eigenvalues(pairs, m=4, mprime=2) == []

    @pytest.mark.parametrize(
        "m,mprime,expected",
        [(5, 4, True), (9, 8, True), (6, 4, False), (3, 2, False), (4, 4, False), (10, 8, True)],
    )
    def test_rotation_rule(self, m, mprime, expected):
        assert rotation_applies(m, mprime) is expected


class TestRotation:
    def test_rotated_pairs_are_eigenpairs(self, quintic_scalar):
        A, B = quintic_scalar
        pair = EigenPair(3j, np.array([1j]))
        assert residual_check(A, B, 1, pair) < 1e-12
        down, up = rotate_imaginary_pair(pair, 5, 4)
        assert down.lam == pytest.approx(3.0)
        assert up.lam == pytest.approx(-3.0)
        np.testing.assert_allclose(down.x, [1.0], atol=1e-12)
        np.testing.assert_allclose(up.x, [-1.0], atol=1e-12)
        assert residual_check(A, B, 1, down) < 1e-12
        assert residual_check(A, B, 1, up) < 1e-12

    def test_extraction_uses_rotation(self, quintic_scalar):
        A, B = quintic_scalar
        system = build_eigen_system(A, B, 1, seed=0)
        pair = EigenPair(3j, np.array([1j]))
        report = SolveReport(
            classes=[EquivalenceClass(pair, 5, 4)], m=5, mprime=4, n=1, k=1, seed=0, path_count=1,
            optimal_count=1, paths_converged=1,
        )
        found = extract_real_pairs(report, system)
        assert sorted(p.lam.real for p in found) == pytest.approx([-3.0, 3.0])
        assert all(p.is_real for p in found)


class TestExtractRealPair:
    def test_real_isolated_pair_returned(self, quartic_two_var):
        system = build_eigen_system(quartic_two_var, identity_tensor(2, 2), 1, seed=0)
        pair = EigenPair(1.0 + 1e-14j, np.array([1.0 + 1e-14j, 1e-15j]))
        found = extract_real_pair(pair, system)
        assert found is not None
        assert found.is_real
        assert found.lam == pytest.approx(1.0)
        np.testing.assert_allclose(found.x, [1.0, 0.0], atol=1e-12)

    def test_complex_eigenvalue_rejected(self, quartic_two_var):
        system = build_eigen_system(quartic_two_var, identity_tensor(2, 2), 1, seed=0)
        assert extract_real_pair(EigenPair(1.0 + 1e-3j, np.array([1.0, 0.0])), system) is None

    def test_singular_pairs_use_looser_tolerance(self, quartic_two_var):
        system = build_eigen_system(quartic_two_var, identity_tensor(2, 2), 1, seed=0)
        pair = EigenPair(1.0 + 1e-6j, np.array([1.0, 0.0]), classification=EndpointKind.SINGULAR_ISOLATED)
        assert extract_real_pair(pair, system) is not None
        regular = pair.with_updates(classification=EndpointKind.REGULAR)
        assert extract_real_pair(regular, system) is None

    def test_positive_dimensional_heuristic(self):
        # every vector is an eigenvector of the identity pencil, so Re(x) works
        system = build_eigen_system(DenseTensor(np.eye(3)), identity_tensor(2, 3), 1, seed=0)
        pair = EigenPair(1.0, np.array([1.0, 0.5 + 0.5j, 0.3j]), classification=EndpointKind.POSITIVE_DIMENSIONAL)
        found = extract_real_pair(pair, system)
        assert found is not None
        assert found.lam == pytest.approx(1.0)
        np.testing.assert_allclose(found.x, [1.0, 0.5, 0.0], atol=1e-12)


class TestSignAndMerge:
    def test_canonical_sign_even_order(self):
        pair = EigenPair(2.0, np.array([-0.6, 0.8]))
        fixed = canonical_sign(pair, 4)
        assert fixed.lam == pytest.approx(2.0)
        np.testing.assert_allclose(fixed.x, [0.6, -0.8])
        again = canonical_sign(fixed, 4)
        np.testing.assert_array_equal(again.x, fixed.x)

    def test_canonical_sign_odd_order_flips_lambda(self):
        fixed = canonical_sign(EigenPair(2.0, np.array([0.0, -1.0])), 3)
        assert fixed.lam == pytest.approx(-2.0)
        np.testing.assert_allclose(fixed.x, [0.0, 1.0])

    def test_merge_keeps_class_multiplicity(self):
        a = EigenPair(1.0, np.array([1.0, 0.0]), multiplicity=5, path_ids=(0, 2, 4, 6, 8))
        b = EigenPair(1.0 + 1e-9, np.array([1.0, 1e-9]), multiplicity=5, path_ids=(0, 2, 4, 6, 8))
        c = EigenPair(0.5, np.array([0.6, 0.8]), path_ids=(1,))
        merged = merge_real_pairs([a, b, c])
        assert [p.lam.real for p in merged] == pytest.approx([0.5, 1.0])
        assert merged[1].multiplicity == 5
        assert merged[1].path_ids == (0, 2, 4, 6, 8)

    def test_merge_prefers_larger_multiplicity(self):
        a = EigenPair(1.0, np.array([1.0, 0.0]), path_ids=(3,))
        b = EigenPair(1.0, np.array([1.0, 0.0]), multiplicity=2, path_ids=(0, 7))
        merged = merge_real_pairs([a, b])
        assert len(merged) == 1
        assert merged[0].multiplicity == 2
        assert merged[0].path_ids == (0, 7)


class TestDrivers:
    def test_zeig_two_variable_quartic(self, quartic_two_var):
        pairs = zeig(quartic_two_var)
        np.testing.assert_allclose(sorted(p.lam.real for p in pairs), [0.5, 0.5, 1.0, 1.0], atol=1e-6)
        for pair in pairs:
            assert pair.is_real
            assert np.linalg.norm(pair.x) == pytest.approx(1.0)
            first = next(v for v in pair.x.real if abs(v) > 1e-8)
            assert first > 0
        halves = sorted(tuple(np.round(p.x.real, 6)) for p in pairs if abs(p.lam - 0.5) < 1e-6)
        s = round(1 / np.sqrt(2), 6)
        assert halves == [(s, -s), (s, s)]

    def test_zeig_reuses_report(self, quartic_two_var):
        report = solve_eigenproblem(quartic_two_var, identity_tensor(2, 2), seed=0)
        direct = zeig(quartic_two_var)
        reused = zeig(quartic_two_var, report=report)
        assert [p.sort_key() for p in direct] == [p.sort_key() for p in reused]

    def test_heig_symmetric_matrix(self):
        rng = np.random.default_rng(5)
        M = rng.standard_normal((3, 3))
        M = M + M.T
        pairs = heig(DenseTensor(M))
        np.testing.assert_allclose(sorted(p.lam.real for p in pairs), np.linalg.eigvalsh(M), atol=1e-8)
        for pair in pairs:
            assert np.max(np.abs(pair.x)) == pytest.approx(1.0)
            np.testing.assert_allclose(M @ pair.x.real, pair.lam.real * pair.x.real, atol=1e-8)

    def test_heig_diagonal_tensor(self, diagonal_quartic):
        pairs = heig(diagonal_quartic)
        for value, index in ((1.0, 0), (2.0, 1), (3.0, 2)):
            e = np.zeros(3)
            e[index] = 1.0
            assert any(abs(p.lam - value) < 1e-4 and np.max(np.abs(p.x - e)) < 1e-3 for p in pairs)
