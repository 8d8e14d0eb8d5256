"""Preparation schemes for the interpolating states.

Driven-cavity scheme: with a classical drive of amplitude A on a resonant
cavity (omega = omega_0), the interaction-picture propagator is

    U_I(t) = D(-A/omega) exp(-i g t (a^dag^M sigma- + a^M sigma+)) D(A/omega).

Starting from |0> x |e>, detecting the atom in |g> after a short interaction
leaves the field in ||eta,M> with eta = omega^2 / (A^2 + omega^2).  The
interaction exponential is evaluated exactly on its invariant two-level
blocks {|n> x |e>, |n+M> x |g>}.

Kerr scheme: a displaced Kerr interferometer output D(-lambda) U_K |lambda>
contains ||eta,2> at first order in the accumulated Kerr phase; higher-order
media of odd order 2S+1 produce ||eta,S+1> the same way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm
from scipy.special import gammaln

from .errors import ValidationError
from .fock_space import (
    FockVector,
    coherent_vector,
    default_dim,
    displacement_matrix,
    guard_band,
    ladder_matrices,
)

@dataclass(frozen=True)
class DriveParams:
    """Classical drive amplitude A >= 0, cavity frequency omega > 0 (resonant case),
    coupling g > 0 and the multiphoton interaction order M >= 1."""

    A: float
    omega: float
    g: float
    multiphoton_m: int = 1

    def __post_init__(self):
        if self.A < 0 or not math.isfinite(self.A):
            raise ValidationError(f"drive amplitude A must be finite and >= 0, got {self.A}")
        if not self.omega > 0:
            raise ValidationError(f"omega must be > 0, got {self.omega}")
        if not self.g > 0:
            raise ValidationError(f"coupling g must be > 0, got {self.g}")
        if self.multiphoton_m < 1:
            raise ValidationError(f"multiphoton order must be >= 1, got {self.multiphoton_m}")

    @property
    def displacement(self) -> float:
        return self.A / self.omega

    @property
    def predicted_eta(self) -> float:
        """eta = omega^2 / (A^2 + omega^2) of the post-detection field."""
        return self.omega**2 / (self.A**2 + self.omega**2)


@dataclass(frozen=True)
class KerrParams:
    """Accumulated Kerr phase gamma (strength x interaction time), input coherent
    amplitude lambda >= 0, and the generalized order S of the medium."""

    gamma: float
    lam: float
    order_s: int = 1

    def __post_init__(self):
        if self.lam < 0:
            raise ValidationError(f"lambda must be >= 0, got {self.lam}")
        if self.order_s < 0:
            raise ValidationError(f"order S must be >= 0, got {self.order_s}")

    @property
    def first_order_reliable(self) -> bool:
        """False when |gamma| lambda^4 > 0.1, where first-order analysis degrades."""
        return abs(self.gamma) * self.lam**4 <= 0.1


def _interaction_blocks(gt: float, m: int, dim: int) -> tuple[np.ndarray, np.ndarray]:
    """cos/sin entries of exp(-i gt (a^dag^M sigma- + a^M sigma+)) per block.

    Block n couples |n> x |e> with |n+M> x |g> at frequency
    kappa_n = sqrt((n+M)!/n!); levels with n+M >= dim are uncoupled in the
    truncated space and evolve trivially.
    """
    kappa = np.zeros(dim)
    coupled = np.arange(dim - m)
    kappa[: dim - m] = np.exp(0.5 * (gammaln(coupled + m + 1) - gammaln(coupled + 1)))
    return np.cos(gt * kappa), np.sin(gt * kappa)


def generate_by_detection(
    drive: DriveParams, t: float, dim: int | None = None
) -> tuple[FockVector | None, float]:
    """Field state conditioned on detecting the atom in |g>, plus that probability.

    Starts from |0> x |e>; returns (None, 0.0) when there is nothing to detect
    (t = 0, so the ground branch is empty).
    """
    m = drive.multiphoton_m
    gamma = drive.displacement
    if dim is None:
        dim = default_dim(m, gamma)
    dim = int(dim)
    if dim < m + 1:
        raise ValidationError(f"dim={dim} too small for the {m}-photon interaction")
    displaced_vacuum = coherent_vector(gamma, dim)  # D(A/omega)|0>
    cos_part, sin_part = _interaction_blocks(drive.g * t, m, dim)
    g_field = np.zeros(dim, dtype=complex)
    g_field[m:] = -1j * sin_part[: dim - m] * displaced_vacuum[: dim - m]
    probability = float(np.sum(np.abs(g_field) ** 2))
    if probability == 0.0:
        return None, 0.0
    field = displacement_matrix(-gamma, dim) @ g_field
    return field / np.linalg.norm(field), probability


def excited_branch_after_drive(drive: DriveParams, t: float, dim: int | None = None) -> FockVector:
    """Field amplitudes of the undetected (excited-atom) branch, unnormalized."""
    m = drive.multiphoton_m
    gamma = drive.displacement
    if dim is None:
        dim = default_dim(m, gamma)
    displaced_vacuum = coherent_vector(gamma, int(dim))
    cos_part, _ = _interaction_blocks(drive.g * t, m, int(dim))
    return displacement_matrix(-gamma, int(dim)) @ (cos_part * displaced_vacuum)


def drive_frame_identity_defect(drive: DriveParams, t: float, dim: int | None = None) -> float:
    """Blockwise operator-norm defect of the drive-frame transformation of `a`.

    Conjugating a by U_0(t) = exp(-i t (omega N + A (a^dag + a))) telescopes to

        U_0^{-1}(t) a U_0(t) = e^{-i omega t} D(-A/omega) a D(A/omega) - (A/omega) I
                             = e^{-i omega t} (a + A/omega) - A/omega,

    the constant arising because the zeroth commutator term is `a` itself, not
    its displaced image.  Both sides are built independently on the truncated
    space and compared on the leak-free upper-left block.
    """
    gamma = drive.displacement
    if dim is None:
        dim = default_dim(0, gamma) * 2
    dim = int(dim)
    a, adag, number = ladder_matrices(dim)
    h_field = drive.omega * number + drive.A * (adag + a)
    u0 = expm(-1j * t * h_field)
    lhs = u0.conj().T @ a @ u0
    d_plus = displacement_matrix(gamma, dim)
    d_minus = displacement_matrix(-gamma, dim)
    phase = np.exp(-1j * drive.omega * t)
    rhs = phase * (d_minus @ a @ d_plus) - gamma * np.eye(dim)
    band = guard_band(gamma, dim)
    block = slice(0, dim - band)
    return float(np.linalg.norm(lhs[block, block] - rhs[block, block], 2))


def kerr_output(kerr: KerrParams, dim: int | None = None) -> FockVector:
    """Displaced Kerr-medium output D(-lambda) U_K |lambda>.

    U_K applies the diagonal phase exp(i gamma n(n-1).../(S+1)!) built from the
    falling factorial n (n-1) ... (n-S); S = 1 is the quadratic Kerr case
    exp(i (gamma/2) a^dag^2 a^2).  Phases are exact in the Fock basis and the
    displacement acts afterwards.
    """
    if dim is None:
        dim = default_dim(0, 2.0 * kerr.lam)
    dim = int(dim)
    n = np.arange(dim, dtype=float)
    falling = np.ones(dim)
    for j in range(kerr.order_s + 1):
        falling *= n - j
    phases = np.exp(1j * kerr.gamma * falling / math.factorial(kerr.order_s + 1))
    kerr_state = phases * coherent_vector(kerr.lam, dim)
    return displacement_matrix(-kerr.lam, dim) @ kerr_state
