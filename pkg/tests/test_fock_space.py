"""Ladder operators, displacement matrices and coherent/displaced states."""

import math

import numpy as np
import pytest

from numcoh.errors import TruncationError, ValidationError
from numcoh.fock_space import (
    coherent_tail_mass,
    coherent_vector,
    default_dim,
    displaced_number_state,
    displacement_matrix,
    guard_band,
    ladder_matrices,
)


class TestLadderMatrices:
    def test_dim_one_annihilation_is_zero(self):
        a, adag, number = ladder_matrices(1)
        assert a.shape == (1, 1) and a[0, 0] == 0.0
        assert number[0, 0] == 0.0

    def test_superdiagonal_entries(self):
        a, adag, number = ladder_matrices(3)
        assert a[0, 1] == pytest.approx(1.0)
        assert a[1, 2] == pytest.approx(math.sqrt(2.0))
        assert np.allclose(adag, a.T)
        assert np.allclose(np.diag(number), [0.0, 1.0, 2.0])

    def test_commutator_truncation_artifact(self):
        dim = 9
        a, adag, _ = ladder_matrices(dim)
        comm = a @ adag - adag @ a
        expected = np.eye(dim)
        expected[-1, -1] = 1.0 - dim
        assert np.abs(comm - expected).max() < 1e-13

    def test_rejects_nonpositive_dim(self):
        with pytest.raises(ValidationError):
            ladder_matrices(0)


class TestDisplacementMatrix:
    def test_zero_alpha_is_identity(self):
        assert np.array_equal(displacement_matrix(0.0, 5), np.eye(5))

    def test_column_zero_is_coherent_state(self):
        lam, dim = 1.3, 64
        column = displacement_matrix(lam, dim)[:, 0]
        n = np.arange(dim)
        expected = np.exp(
            -0.5 * lam * lam + n * math.log(lam) - 0.5 * np.vectorize(math.lgamma)(n + 1.0)
        )
        assert np.abs(column - expected).max() < 1e-12

    def test_inverse_composition(self):
        dim = 64
        product = displacement_matrix(-1.0, dim) @ displacement_matrix(1.0, dim)
        assert np.abs(product - np.eye(dim)).max() < 1e-10

    def test_composition_phase_rule(self):
        delta, gamma = 0.4 + 0.5j, -0.3 + 0.2j
        block = 12
        dim = default_dim(block, abs(delta) + abs(gamma))
        lhs = displacement_matrix(delta, dim) @ displacement_matrix(gamma, dim)
        rhs = displacement_matrix(delta + gamma, dim) * np.exp(1j * (delta * np.conj(gamma)).imag)
        assert np.abs((lhs - rhs)[:block, :block]).max() < 1e-8

    def test_creation_covariance_blockwise(self):
        lam, block = 1.0, 20
        dim = default_dim(block, lam)
        _, adag, _ = ladder_matrices(dim)
        lhs = displacement_matrix(-lam, dim) @ adag @ displacement_matrix(lam, dim)
        rhs = adag + lam * np.eye(dim)
        assert np.abs((lhs - rhs)[:block, :block]).max() < 1e-8

    def test_norm_preservation(self):
        dim = default_dim(6, 2.0)
        d = displacement_matrix(2.0j, dim)
        rng = np.random.default_rng(3)
        psi = rng.normal(size=8) + 1j * rng.normal(size=8)
        state = np.zeros(dim, dtype=complex)
        state[:8] = psi / np.linalg.norm(psi)
        assert abs(np.linalg.norm(d @ state) - 1.0) < 1e-8


class TestCoherentVector:
    def test_vacuum(self):
        vec = coherent_vector(0.0, 4)
        assert np.array_equal(vec, [1.0, 0.0, 0.0, 0.0])

    def test_amplitude_formula(self):
        vec = coherent_vector(1.0, 32)
        n = np.arange(32)
        expected = np.exp(-0.5 - 0.5 * np.vectorize(math.lgamma)(n + 1.0))
        assert np.abs(vec - expected).max() < 1e-13

    def test_mean_photon_number(self):
        vec = coherent_vector(2.0, 64)
        n = np.arange(64)
        mean = float(np.dot(n, np.abs(vec) ** 2))
        assert mean == pytest.approx(4.0, abs=1e-10)

    def test_truncation_error_signaled(self):
        with pytest.raises(TruncationError):
            coherent_vector(4.0, 18)

    def test_tail_mass_reporting(self):
        assert coherent_tail_mass(0.0, 8) == 0.0
        assert coherent_tail_mass(2.0, 64) < 1e-12
        assert coherent_tail_mass(4.0, 18) > 1e-12


class TestDisplacedNumberState:
    def test_zero_displacement(self):
        vec = displaced_number_state(0.0, 3, 8)
        expected = np.zeros(8)
        expected[3] = 1.0
        assert np.array_equal(vec, expected)

    def test_k_zero_matches_coherent(self):
        lam, dim = 0.9, 48
        assert np.abs(displaced_number_state(lam, 0, dim) - coherent_vector(lam, dim)).max() < 1e-11

    def test_norm_one(self):
        vec = displaced_number_state(1.0 + 0.5j, 5, 64)
        assert abs(np.linalg.norm(vec) - 1.0) < 1e-10

    def test_rejects_level_outside_space(self):
        with pytest.raises(ValidationError):
            displaced_number_state(0.1, 8, 8)


class TestPolicies:
    def test_default_dim_floor(self):
        assert default_dim(0, 0.0) == 32
        assert default_dim(10, 0.0) >= 42

    def test_default_dim_grows_with_displacement(self):
        assert default_dim(5, 3.0) > default_dim(5, 0.5)

    def test_guard_band_bounds(self):
        assert guard_band(0.0, 64) == 8
        assert 8 < guard_band(1.0, 96) < 96
