"""
Tests for the independent oracles and random instance generation
"""

import numpy as np
import pytest
from pydantic import ValidationError

from src.oracles import (
    RandomSpec,
    contract_by_loops,
    matrix_eig_oracle,
    random_tensor,
    random_tensor_pair,
    residual_check,
    two_var_oracle,
)
from src.solvers.consistency import match_multisets
from src.tensors.dense import DenseTensor, identity_tensor, is_symmetric, mode_k_apply, transpose_kl
from src.utils.errors import InputError


class TestRandomTensors:
    def test_deterministic(self):
        spec = RandomSpec(m=3, n=3, seed=9)
        assert random_tensor(spec) == random_tensor(spec)

    def test_field(self):
        assert not np.any(random_tensor(RandomSpec(m=3, n=2, field="real")).entries.imag)
        assert np.any(random_tensor(RandomSpec(m=3, n=2, field="complex")).entries.imag)

    def test_symmetric(self):
        A = random_tensor(RandomSpec(m=4, n=3, seed=1, symmetric=True))
        assert is_symmetric(A)
        np.testing.assert_allclose(transpose_kl(A, 1, 4).entries, A.entries, atol=1e-14)

    def test_pair_orders(self):
        A, B = random_tensor_pair(RandomSpec(m=5, mprime=3, n=2, seed=2))
        assert (A.order, B.order, A.dim, B.dim) == (5, 3, 2, 2)

    def test_spec_validation(self):
        with pytest.raises(ValidationError):
            RandomSpec(m=1, n=2)
        with pytest.raises(ValidationError):
            RandomSpec(m=3, n=2, field="quaternion")


class TestMatrixOracle:
    def test_diagonal(self):
        assert matrix_eig_oracle(np.diag([2.0, 1.0]), np.eye(2)) == pytest.approx([1.0, 2.0])

    def test_scaled_b_halves_eigenvalues(self):
        M = np.array([[2.0, 1.0], [0.0, 4.0]])
        assert matrix_eig_oracle(M, 2 * np.eye(2)) == pytest.approx([1.0, 2.0])

    def test_accepts_order_two_tensors(self):
        assert matrix_eig_oracle(DenseTensor(np.diag([1.0, 3.0])), identity_tensor(2, 2)) == pytest.approx([1.0, 3.0])

    def test_matches_characteristic_polynomial(self):
        rng = np.random.default_rng(4)
        M = rng.standard_normal((5, 5))
        assert match_multisets(matrix_eig_oracle(M, np.eye(5)), np.roots(np.poly(M)), tol=1e-8)

    def test_singular_b(self):
        with pytest.raises(InputError):
            matrix_eig_oracle(np.eye(2), np.array([[1.0, 1.0], [1.0, 1.0]]))

    def test_shape_errors(self):
        with pytest.raises(InputError):
            matrix_eig_oracle(np.ones((2, 3)), np.eye(2))
        with pytest.raises(InputError):
            matrix_eig_oracle(np.eye(3), np.eye(2))
        with pytest.raises(InputError):
            matrix_eig_oracle(identity_tensor(3, 2), np.eye(2))


class TestResidual:
    def test_loops_match_vectorized_contraction(self, example_21):
        x = np.array([1.0, 1.0])
        np.testing.assert_allclose(contract_by_loops(example_21, 1, x), [14.0, 14.0])
        for k in (1, 2, 3):
            np.testing.assert_allclose(contract_by_loops(example_21, k, x), mode_k_apply(example_21, k, x))

    def test_exact_pair(self):
        A = DenseTensor(np.diag([1.0, 2.0]))
        assert residual_check(A, identity_tensor(2, 2), 1, (2.0, np.array([0.0, 3.0]))) <= 1e-12

    def test_perturbed_lambda_is_linear(self):
        A = DenseTensor(np.diag([1.0, 2.0]))
        x = np.array([0.0, 3.0])
        assert residual_check(A, identity_tensor(2, 2), 1, (2.0 + 1e-4, x)) == pytest.approx(3e-4)

    def test_random_pair_is_far(self, example_21):
        assert residual_check(example_21, identity_tensor(2, 2), 1, (0.3, np.array([0.7, -0.2]))) > 1e-2

    def test_accepts_objects(self):
        class Pair:
            lam = 1.0
            x = np.array([1.0, 0.0])

        assert residual_check(identity_tensor(2, 2), identity_tensor(2, 2), 1, Pair()) == 0.0


class TestTwoVariableOracle:
    def test_example_21(self, example_21):
        out = two_var_oracle(example_21, identity_tensor(2, 2))
        assert len(out) == 3
        np.testing.assert_allclose(sorted(abs(lam) for lam, _ in out), [0.4105, 4.3820, 9.8995], atol=1e-3)

    def test_quartic_z_problem(self, quartic_two_var):
        out = two_var_oracle(quartic_two_var, identity_tensor(2, 2))
        np.testing.assert_allclose(sorted(lam.real for lam, _ in out), [0.5, 0.5, 1.0, 1.0], atol=1e-10)
        for lam, x in out:
            assert residual_check(quartic_two_var, identity_tensor(2, 2), 1, (lam, x)) < 1e-10

    @pytest.mark.parametrize("m,mprime", [(3, 2), (4, 2), (3, 3), (5, 5)])
    def test_generic_counts_and_residuals(self, m, mprime):
        A, B = random_tensor_pair(RandomSpec(m=m, mprime=mprime, n=2, seed=m + mprime))
        out = two_var_oracle(A, B)
        assert len(out) == m + mprime - 2
        for lam, x in out:
            scale = max(1.0, abs(lam)) * max(1.0, np.max(np.abs(x))) ** max(m, mprime)
            assert residual_check(A, B, 1, (lam, x)) < 1e-8 * scale

    def test_requires_two_dimensions(self):
        with pytest.raises(InputError):
            two_var_oracle(identity_tensor(3, 3), identity_tensor(2, 3))
