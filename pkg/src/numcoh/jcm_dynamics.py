"""Two-photon Jaynes-Cummings dynamics from an arbitrary finite field state.

The atom starts excited; the interaction exchanges photon pairs with Rabi
frequencies Omega_n = g sqrt((n+1)(n+2)) and detuning Delta = omega_0 - 2 omega.
Each pair {|n> x |e>, |n+2> x |g>} evolves as a closed two-level problem, so
the joint state is available in closed form at any time:

    e_branch[n]   = C_n (cos(d_n t) - i (Delta / 2 d_n) sin(d_n t)) e^{+i Delta t / 2}
    g_branch[n+2] = -i C_n (Omega_n / d_n) sin(d_n t) e^{-i Delta t / 2}

with d_n = sqrt(Delta^2/4 + Omega_n^2).  At Delta = 0 this reduces to the
familiar cos/sin pair.  Scaled time tau = g t is used by all callers that
reproduce figure datasets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .fock_space import FockVector
from .states import IntermediateParams, intermediate_state

_PI = math.pi


@dataclass(frozen=True)
class JcmParams:
    """Two-photon coupling g > 0 (rad/time) and detuning delta (rad/time)."""

    g: float
    delta: float = 0.0

    def __post_init__(self):
        if not self.g > 0:
            raise ValidationError(f"coupling g must be > 0, got {self.g}")

    def rabi(self, n: np.ndarray | float) -> np.ndarray | float:
        """Omega_n = g sqrt((n+1)(n+2))."""
        return self.g * np.sqrt((np.asarray(n, dtype=float) + 1.0) * (np.asarray(n, dtype=float) + 2.0))


@dataclass(frozen=True)
class JointAtomField:
    """Joint pure state: field amplitudes for the excited and ground atom branches."""

    e_branch: np.ndarray
    g_branch: np.ndarray
    time: float

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.e_branch) ** 2) + np.sum(np.abs(self.g_branch) ** 2))


@dataclass(frozen=True)
class AtomicDensity:
    """Reduced 2x2 atomic state: rho11 = ground, rho22 = excited, rho12 = <g|rho|e>."""

    rho11: float
    rho22: float
    rho12: complex

    def trace(self) -> float:
        return self.rho11 + self.rho22


def evolve(params: JcmParams, initial: FockVector, t: float) -> JointAtomField:
    """Closed-form joint state at time t for an initially excited atom."""
    c = np.asarray(initial, dtype=complex)
    n = np.arange(c.size, dtype=float)
    omega_n = params.rabi(n)
    delta = params.delta
    delta_n = np.sqrt(0.25 * delta * delta + omega_n * omega_n)
    e_amp = c * (np.cos(delta_n * t) - 1j * (0.5 * delta / delta_n) * np.sin(delta_n * t))
    g_amp = -1j * c * (omega_n / delta_n) * np.sin(delta_n * t)
    if delta != 0.0:
        e_amp = e_amp * np.exp(0.5j * delta * t)
        g_amp = g_amp * np.exp(-0.5j * delta * t)
    g_branch = np.zeros(c.size + 2, dtype=complex)
    g_branch[2:] = g_amp
    return JointAtomField(e_branch=e_amp, g_branch=g_branch, time=float(t))


def inversion(params: JcmParams, initial: FockVector, t: float) -> float:
    """Population inversion <sigma_3>(t), in [-1, 1].

    On resonance this is the weighted cosine sum over |C_n|^2; off resonance
    it is computed from the branch norms of the evolved joint state, giving
    two genuinely independent code paths at delta = 0.
    """
    if params.delta == 0.0:
        p = np.abs(np.asarray(initial, dtype=complex)) ** 2
        omega_n = params.rabi(np.arange(p.size, dtype=float))
        return float(np.dot(p, np.cos(2.0 * omega_n * t)))
    joint = evolve(params, initial, t)
    return float(np.sum(np.abs(joint.e_branch) ** 2) - np.sum(np.abs(joint.g_branch) ** 2))


def atomic_density(params: JcmParams, initial: FockVector, t: float) -> AtomicDensity:
    """Reduced atomic density matrix obtained by tracing the field out of the joint state."""
    joint = evolve(params, initial, t)
    e_pad = np.zeros(joint.g_branch.size, dtype=complex)
    e_pad[: joint.e_branch.size] = joint.e_branch
    rho22 = float(np.sum(np.abs(joint.e_branch) ** 2))
    rho11 = float(np.sum(np.abs(joint.g_branch) ** 2))
    # <g|rho|e> = sum_m g_branch[m] conj(e_branch[m])
    rho12 = complex(np.vdot(e_pad, joint.g_branch))
    return AtomicDensity(rho11=rho11, rho22=rho22, rho12=rho12)


def atomic_coherence_literal(params: JcmParams, initial: FockVector, t: float) -> float:
    """Resonant coherence magnitude as the explicit cosine-sine cross sum.

    sum_n C_{n+2} C_n cos(Omega_{n+2} t) sin(Omega_n t); for real amplitudes
    this equals |rho12| of :func:`atomic_density` up to the suppressed -i
    phase, and is shipped as a cross-check of the traced-out computation.
    """
    if params.delta != 0.0:
        raise ValidationError("literal coherence formula applies on resonance only")
    c = np.asarray(initial, dtype=complex)
    if c.size < 3:
        return 0.0
    if np.abs(c.imag).max() > 0:
        raise ValidationError("literal coherence formula assumes real amplitudes")
    cr = c.real
    n = np.arange(c.size - 2, dtype=float)
    omega_n = params.rabi(n)
    omega_n2 = params.rabi(n + 2.0)
    return float(np.sum(cr[2:] * cr[:-2] * np.cos(omega_n2 * t) * np.sin(omega_n * t)))


def entropy(rho: AtomicDensity) -> float:
    """von Neumann entropy -pi+ ln pi+ - pi- ln pi- of a 2x2 density matrix."""
    gap = math.sqrt((rho.rho22 - rho.rho11) ** 2 + 4.0 * abs(rho.rho12) ** 2)
    gap = min(gap, 1.0)  # roundoff guard: eigenvalues must stay in [0, 1]
    total = 0.0
    for p in (0.5 * (1.0 + gap), 0.5 * (1.0 - gap)):
        if p > 0.0:
            total -= p * math.log(p)
    return total


def field_density_matrix(params: JcmParams, initial: FockVector, t: float) -> np.ndarray:
    """Reduced field density matrix (rank <= 2) from the evolved joint state."""
    joint = evolve(params, initial, t)
    e_pad = np.zeros(joint.g_branch.size, dtype=complex)
    e_pad[: joint.e_branch.size] = joint.e_branch
    return np.outer(e_pad, e_pad.conj()) + np.outer(joint.g_branch, joint.g_branch.conj())


def field_entropy(params: JcmParams, initial: FockVector, t: float) -> float:
    """Entropy of the reduced field state via its eigenvalues."""
    eigvals = np.linalg.eigvalsh(field_density_matrix(params, initial, t))
    eigvals = np.clip(eigvals, 0.0, 1.0)
    positive = eigvals[eigvals > 1e-300]
    return float(-np.sum(positive * np.log(positive)))


def field_qfunction(params: JcmParams, initial: FockVector, t: float, beta: complex) -> float:
    """Husimi Q of the cavity field at time t (resonant case).

    Q(beta) = (e^{-|b|^2}/pi) ( |sum_n C_n cos(Omega_n t) (b*)^n/sqrt(n!)|^2
                              + |sum_n C_n sin(Omega_n t) (b*)^{n+2}/sqrt((n+2)!)|^2 )
    """
    if params.delta != 0.0:
        raise ValidationError("field Q-function implemented for the resonant case only")
    c = np.asarray(initial, dtype=complex)
    beta = complex(beta)
    count = c.size + 2
    coh = np.empty(count, dtype=complex)
    coh[0] = math.exp(-0.5 * abs(beta) ** 2)
    steps = np.conj(beta) / np.sqrt(np.arange(1, count, dtype=float))
    coh[1:] = coh[0] * np.cumprod(steps)
    omega_n = params.rabi(np.arange(c.size, dtype=float))
    s_cos = np.dot(coh[: c.size], c * np.cos(omega_n * t))
    s_sin = np.dot(coh[2:], c * np.sin(omega_n * t))
    return (abs(s_cos) ** 2 + abs(s_sin) ** 2) / _PI


def photon_distribution(params: JcmParams, initial: FockVector, t: float) -> np.ndarray:
    """P_n(t) = |C_n|^2 cos^2(Omega_n t) + |C_{n-2}|^2 sin^2(Omega_{n-2} t).

    Returned for n = 0 .. dim+1 where dim is the initial state's length;
    the values sum to 1.
    """
    if params.delta != 0.0:
        raise ValidationError("photon distribution implemented for the resonant case only")
    p = np.abs(np.asarray(initial, dtype=complex)) ** 2
    omega_n = params.rabi(np.arange(p.size, dtype=float))
    out = np.zeros(p.size + 2)
    out[: p.size] += p * np.cos(omega_n * t) ** 2
    out[2:] += p * np.sin(omega_n * t) ** 2
    return out


def approx_pn_quarter(field: IntermediateParams) -> np.ndarray:
    """Large-<N> approximation of the photon distribution at tau = pi/4.

    P_n ~ [1 + (1-eta)^2 n(n-1) / (eta^2 (M-n+2)^2 (M-n+1)^2)] |C_n|^2
          * sin^2((n - 1/2) pi/4)   for n = 0 .. M.

    The bracket is the exact |C_{n-2}|^2 / |C_n|^2 ratio, so the result is
    the frequency-collapsed form of the exact distribution; it is merely
    probability-like (not renormalized).
    """
    m = field.m
    weights = np.abs(intermediate_state(field, m + 1)) ** 2
    n = np.arange(m + 1, dtype=float)
    denominator = field.eta**2 * (m - n + 2.0) ** 2 * (m - n + 1.0) ** 2
    ratio = (1.0 - field.eta) ** 2 * n * (n - 1.0) / denominator
    return (1.0 + ratio) * weights * np.sin((n - 0.5) * _PI / 4.0) ** 2


def perfect_oscillation_shift(n_band_center: int) -> float:
    """Smallest xi > 0 with (n - 1/2)(pi/4 - xi) an integer multiple of pi.

    At tau = pi/4 - xi the oscillating factor sin^2((n - 1/2) tau) vanishes
    exactly at n = n_band_center, deepening the distribution minima there.
    """
    n = int(n_band_center)
    if n < 1:
        raise ValidationError(f"band center must be >= 1, got {n}")
    half = n - 0.5
    k = math.floor(half / 4.0)
    return _PI / 4.0 - k * _PI / half
