"""
Tests for dense tensors, contractions and monomial input
"""

import numpy as np
import pytest

from src.oracles.residual import contract_by_loops
from src.tensors.dense import (
    DenseTensor,
    ModeContraction,
    identity_tensor,
    is_symmetric,
    mode_k_apply,
    mode_k_jacobian,
    multilinear_form,
    transpose_kl,
)
from src.tensors.monomials import MonomialForm, from_monomials
from src.utils.errors import InputError


def _random_tensor(rng, order, dim):
    shape = (dim,) * order
    return DenseTensor(rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def _random_vector(rng, dim):
    return rng.standard_normal(dim) + 1j * rng.standard_normal(dim)


class TestDenseTensor:
    def test_from_flat_is_row_major(self):
        A = DenseTensor.from_flat(2, 2, [1, 2, 3, 4])
        assert A.entry(1, 2) == 2
        assert A.entry(2, 1) == 3
        assert A.order == 2 and A.dim == 2

    def test_from_flat_rejects_wrong_length(self):
        with pytest.raises(InputError):
            DenseTensor.from_flat(3, 2, [1, 2, 3])

    def test_from_entries_uses_one_based_indices(self):
        A = DenseTensor.from_entries(3, 2, {(2, 1, 2): 7})
        assert A.entry(2, 1, 2) == 7
        assert A.max_abs() == 7

    def test_from_entries_rejects_out_of_range(self):
        with pytest.raises(InputError):
            DenseTensor.from_entries(3, 2, {(3, 1, 1): 1})

    def test_immutable(self):
        A = DenseTensor.from_flat(2, 2, [1, 2, 3, 4])
        with pytest.raises(AttributeError):
            A.foo = 1
        with pytest.raises(ValueError):
            A.entries[0, 0] = 5

    def test_equality_and_hash(self):
        A = DenseTensor.from_flat(2, 2, [1, 2, 3, 4])
        B = DenseTensor.from_flat(2, 2, [1, 2, 3, 4])
        assert A == B
        assert hash(A) == hash(B)
        assert A != A.scaled(2)

    def test_ragged_shape_rejected(self):
        with pytest.raises(InputError):
            DenseTensor(np.zeros((2, 3)))


class TestContractions:
    @pytest.mark.parametrize("order,dim", [(2, 3), (3, 2), (4, 3), (5, 2)])
    def test_mode_apply_matches_index_loops(self, rng, order, dim):
        A = _random_tensor(rng, order, dim)
        x = _random_vector(rng, dim)
        for k in range(1, order + 1):
            np.testing.assert_allclose(mode_k_apply(A, k, x), contract_by_loops(A, k, x), atol=1e-12)

    @pytest.mark.parametrize("order,dim", [(2, 3), (3, 3), (4, 2)])
    def test_jacobian_matches_finite_differences(self, rng, order, dim):
        A = _random_tensor(rng, order, dim)
        x = _random_vector(rng, dim)
        h = 1e-6
        for k in range(1, order + 1):
            jac = mode_k_jacobian(A, k, x)
            for j in range(dim):
                e = np.zeros(dim)
                e[j] = h
                fd = (mode_k_apply(A, k, x + e) - mode_k_apply(A, k, x - e)) / (2 * h)
                np.testing.assert_allclose(jac[:, j], fd, atol=1e-6)

    def test_apply_and_jacobian_agree_with_separate_calls(self, rng):
        A = _random_tensor(rng, 4, 3)
        x = _random_vector(rng, 3)
        mode = ModeContraction(A, 2)
        value, jac = mode.apply_and_jacobian(x)
        np.testing.assert_allclose(value, mode.apply(x))
        np.testing.assert_allclose(jac, mode.jacobian(x))

    def test_euler_identity(self, rng):
        # J(x) x = (m - 1) A^(k) x^(m-1) for a homogeneous map
        A = _random_tensor(rng, 4, 3)
        x = _random_vector(rng, 3)
        np.testing.assert_allclose(mode_k_jacobian(A, 1, x) @ x, 3 * mode_k_apply(A, 1, x), atol=1e-10)

    def test_multilinear_form_of_identity(self, rng):
        x = _random_vector(rng, 4)
        assert multilinear_form(identity_tensor(3, 4), x) == pytest.approx(np.sum(x ** 3))

    def test_identity_mode_one_is_componentwise_power(self, rng):
        x = _random_vector(rng, 3)
        np.testing.assert_allclose(mode_k_apply(identity_tensor(4, 3), 1, x), x ** 3)

    def test_mode_out_of_range(self, rng):
        A = _random_tensor(rng, 3, 2)
        with pytest.raises(InputError):
            mode_k_apply(A, 4, np.ones(2))

    def test_vector_length_checked(self, rng):
        A = _random_tensor(rng, 3, 2)
        with pytest.raises(InputError):
            mode_k_apply(A, 1, np.ones(3))


class TestTranspose:
    def test_mode_k_of_a_is_mode_l_of_transpose(self, rng):
        A = _random_tensor(rng, 3, 3)
        x = _random_vector(rng, 3)
        T = transpose_kl(A, 1, 3)
        np.testing.assert_allclose(mode_k_apply(A, 1, x), mode_k_apply(T, 3, x), atol=1e-12)
        np.testing.assert_allclose(mode_k_apply(A, 2, x), mode_k_apply(T, 2, x), atol=1e-12)

    def test_invalid_pair(self, rng):
        A = _random_tensor(rng, 3, 2)
        with pytest.raises(InputError):
            transpose_kl(A, 2, 2)
        with pytest.raises(InputError):
            transpose_kl(A, 1, 4)

    def test_transpose_is_involution(self, rng):
        A = _random_tensor(rng, 4, 2)
        assert transpose_kl(transpose_kl(A, 2, 4), 2, 4) == A


class TestMonomials:
    def test_duplicate_exponents_merge(self):
        f = MonomialForm.from_terms(2, 2, [(1, (2, 0)), (2, (2, 0)), (1, (1, 1))])
        assert len(f) == 2
        assert dict((a, c) for c, a in f.terms)[(2, 0)] == 3

    def test_wrong_degree_rejected(self):
        with pytest.raises(InputError):
            MonomialForm.from_terms(3, 2, [(1, (2, 0))])

    def test_wrong_dimension_rejected(self):
        with pytest.raises(InputError):
            MonomialForm.from_terms(2, 3, [(1, (2, 0))])

    def test_tensor_reproduces_form(self, rng):
        f = MonomialForm.from_terms(
            6, 3, [(1, (0, 0, 6)), (1, (4, 2, 0)), (1, (2, 4, 0)), (-3, (2, 2, 2))]
        )
        A = from_monomials(f)
        assert is_symmetric(A)
        for _ in range(3):
            x = _random_vector(rng, 3)
            assert multilinear_form(A, x) == pytest.approx(f.evaluate(x), rel=1e-10)

    def test_pure_power_is_diagonal(self):
        A = from_monomials(MonomialForm.from_terms(4, 2, [(3, (4, 0)), (1, (0, 4))]))
        assert A.entry(1, 1, 1, 1) == 3
        assert A.entry(2, 2, 2, 2) == 1
        assert A.entry(1, 1, 1, 2) == 0

    def test_mixed_term_spread_over_permutations(self):
        # 6 x1^2 x2^2 spreads 6 * 2! 2! / 4! = 1 over each of the 6 placements
        A = from_monomials(MonomialForm.from_terms(4, 2, [(6, (2, 2))]))
        assert A.entry(1, 1, 2, 2) == pytest.approx(1.0)
        assert A.entry(2, 1, 2, 1) == pytest.approx(1.0)
