"""Truncated Fock-space linear algebra.

States are 1-D complex arrays indexed by photon number ("FockVector");
operators are dense square complex arrays ("OperatorMatrix").  Workloads
here top out at a few hundred levels, so everything stays dense double
precision.

A truncated displacement generator is exactly anti-Hermitian, so its
exponential is exactly unitary as a matrix; what truncation corrupts is
the *physical* accuracy of the high-index columns.  Operations therefore
carry a working-dimension policy that keeps the states of interest well
below the edge of the retained space.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import expm
from scipy.special import gammaln

from .errors import NumericalError, TruncationError, ValidationError

FockVector = np.ndarray
OperatorMatrix = np.ndarray

#: Tolerated unitarity defect of a computed displacement matrix.
_UNITARITY_TOL = 1e-10

#: Acceptable probability mass lost to truncation when building states.
_TAIL_TOL = 1e-12


def _check_dim(dim: int) -> int:
    dim = int(dim)
    if dim < 1:
        raise ValidationError(f"dimension must be >= 1, got {dim}")
    return dim


def ladder_matrices(dim: int) -> tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]:
    """Annihilation, creation and number matrices on a dim-level space.

    ``a[n-1, n] = sqrt(n)``; the creation matrix is its (real) transpose;
    the number matrix is ``diag(0 .. dim-1)``.
    """
    dim = _check_dim(dim)
    a = np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1)
    return a, a.T.copy(), np.diag(np.arange(dim, dtype=float))


def default_dim(max_photon: int, alpha: complex = 0j) -> int:
    """Working dimension for operations displacing a state of support <= max_photon.

    Displacement spreads support by O(|alpha| sqrt(n)); the factor-4 safety
    margin keeps truncation error far below test tolerances.
    """
    m = int(max_photon)
    if m < 0:
        raise ValidationError(f"max_photon must be >= 0, got {m}")
    aa = abs(alpha)
    spread = m + aa * aa + 3.0 * aa * math.sqrt(m + 1.0)
    return max(4 * math.ceil(spread), m + 32)


def guard_band(alpha: complex, dim: int) -> int:
    """Levels to exclude near the truncation edge in blockwise operator checks.

    Displacement leaks population ~|alpha| sqrt(dim) levels upward, so the
    fixed floor of 8 levels is widened accordingly.
    """
    aa = abs(alpha)
    band = math.ceil(8 + aa * aa + 5.0 * aa * math.sqrt(dim))
    return min(band, dim - 1)


def displacement_matrix(alpha: complex, dim: int) -> OperatorMatrix:
    """exp(alpha a^dag - alpha* a) on the truncated space.

    The result is unitary as a dim x dim matrix; a failed unitarity check
    means the matrix exponential itself did not converge.
    """
    dim = _check_dim(dim)
    alpha = complex(alpha)
    if alpha == 0:
        return np.eye(dim, dtype=complex)
    a, adag, _ = ladder_matrices(dim)
    d = expm(alpha * adag - np.conj(alpha) * a)
    defect = np.abs(d.conj().T @ d - np.eye(dim)).max()
    if defect > _UNITARITY_TOL:
        raise NumericalError(
            f"displacement exponential failed unitarity check: defect {defect:.3e} "
            f"(alpha={alpha}, dim={dim})"
        )
    return d


def coherent_tail_mass(alpha: complex, dim: int) -> float:
    """Probability mass of the coherent state |alpha> beyond level dim-1."""
    dim = _check_dim(dim)
    aa2 = abs(alpha) ** 2
    if aa2 == 0.0:
        return 0.0
    n = np.arange(dim)
    log_p = -aa2 + n * math.log(aa2) - gammaln(n + 1)
    return max(0.0, 1.0 - float(np.sum(np.exp(log_p))))


def coherent_vector(alpha: complex, dim: int) -> FockVector:
    """Truncated, renormalized coherent-state amplitudes e^{-|a|^2/2} a^n / sqrt(n!).

    Raises :class:`TruncationError` when the discarded tail mass reaches 1e-12.
    """
    dim = _check_dim(dim)
    alpha = complex(alpha)
    tail = coherent_tail_mass(alpha, dim)
    if tail >= _TAIL_TOL:
        raise TruncationError(
            f"coherent state |alpha|^2={abs(alpha)**2:.3g} loses {tail:.3e} mass at dim={dim}"
        )
    amps = np.zeros(dim, dtype=complex)
    amps[0] = math.exp(-0.5 * abs(alpha) ** 2)
    for n in range(1, dim):
        amps[n] = amps[n - 1] * alpha / math.sqrt(n)
    return amps / np.linalg.norm(amps)


def displaced_number_state(beta: complex, k: int, dim: int) -> FockVector:
    """D(beta)|k> on the truncated space (column k of the displacement matrix)."""
    dim = _check_dim(dim)
    k = int(k)
    if not 0 <= k < dim:
        raise ValidationError(f"level k={k} outside truncated space of dim {dim}")
    return displacement_matrix(beta, dim)[:, k].copy()


def norm(state: FockVector) -> float:
    return float(np.linalg.norm(state))


def is_normalized(state: FockVector, tol: float = 1e-10) -> bool:
    return abs(np.sum(np.abs(np.asarray(state)) ** 2) - 1.0) < tol
