"""State families: interpolating number-coherent states and their relatives.

The central family ||eta,M> solves

    (sqrt(eta) N + sqrt(1-eta) a) |psi> = sqrt(eta) M |psi>

and is a finite superposition of the number states |0> .. |M>.  It reduces
to |M> at eta -> 1 and to a coherent state in the joint limit eta -> 0,
M -> infinity with sqrt(eta) M fixed.  Binomial states and photon-added
coherent states are provided as comparison families.

All amplitude products are accumulated in the log domain: the factor
M!/(M-n)! overflows double precision near M ~ 200.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from . import special_fns as sf
from .errors import TruncationError, ValidationError
from .fock_space import FockVector

@dataclass(frozen=True)
class IntermediateParams:
    """Parameters (eta, M) of an interpolating number-coherent state.

    eta must lie in (0, 1]; eta = 0 makes the derived lambda diverge and the
    vacuum/coherent endpoints are reachable only as limits.
    """

    eta: float
    m: int

    def __post_init__(self):
        if not 0.0 < self.eta <= 1.0:
            raise ValidationError(f"eta must be in (0, 1], got {self.eta}")
        if int(self.m) != self.m or self.m < 0:
            raise ValidationError(f"M must be a nonnegative integer, got {self.m}")
        object.__setattr__(self, "m", int(self.m))

    @property
    def lam(self) -> float:
        """lambda = sqrt((1-eta)/eta); zero at eta = 1."""
        return math.sqrt((1.0 - self.eta) / self.eta)

    @property
    def lambda_sq(self) -> float:
        return (1.0 - self.eta) / self.eta

    @property
    def eigenvalue(self) -> float:
        """Eigenvalue sqrt(eta) * M of the defining operator."""
        return math.sqrt(self.eta) * self.m


def intermediate_state(params: IntermediateParams, dim: int) -> FockVector:
    """Amplitudes of ||eta,M> on a dim-level space (zero above n = M).

    C_n = lambda^{M-n} M! / ((M-n)! sqrt(n!)) / sqrt(M! L_M(-lambda^2)),
    all nonnegative for real lambda >= 0.
    """
    dim = int(dim)
    m = params.m
    if dim < m + 1:
        raise ValidationError(f"dim={dim} too small for support 0..{m}")
    amps = np.zeros(dim, dtype=complex)
    if params.lam == 0.0:
        amps[m] = 1.0
        return amps
    if m == 0:
        amps[0] = 1.0
        return amps
    n = np.arange(m + 1)
    log_l = sf.log_laguerre_negarg(m, params.lambda_sq).log_magnitude
    log_c = (
        (m - n) * math.log(params.lam)
        + 0.5 * math.lgamma(m + 1)
        - gammaln(m - n + 1)
        - 0.5 * gammaln(n + 1)
        - 0.5 * log_l
    )
    amps[: m + 1] = np.exp(log_c)
    return amps / np.linalg.norm(amps)


def eigen_residual(state: FockVector, params: IntermediateParams) -> float:
    """|| (sqrt(eta) N + sqrt(1-eta) a) psi - sqrt(eta) M psi ||_2."""
    c = np.asarray(state, dtype=complex)
    if c.size < params.m + 2:
        raise ValidationError(f"need dim >= M+2 = {params.m + 2}, got {c.size}")
    n = np.arange(c.size)
    shifted = np.zeros_like(c)
    shifted[:-1] = np.sqrt(n[1:]) * c[1:]  # amplitudes of a|psi>
    residual = math.sqrt(params.eta) * (n - params.m) * c + math.sqrt(1.0 - params.eta) * shifted
    return float(np.linalg.norm(residual))


def binomial_state(eta: float, m: int, dim: int) -> FockVector:
    """Binomial state: amplitudes sqrt(C(M,n) eta^n (1-eta)^(M-n)), eta in [0, 1]."""
    eta = float(eta)
    m = int(m)
    dim = int(dim)
    if not 0.0 <= eta <= 1.0:
        raise ValidationError(f"eta must be in [0, 1], got {eta}")
    if m < 0:
        raise ValidationError(f"M must be >= 0, got {m}")
    if dim < m + 1:
        raise ValidationError(f"dim={dim} too small for support 0..{m}")
    amps = np.zeros(dim, dtype=complex)
    if eta == 0.0:
        amps[0] = 1.0
        return amps
    if eta == 1.0:
        amps[m] = 1.0
        return amps
    n = np.arange(m + 1)
    log_binom = gammaln(m + 1) - gammaln(n + 1) - gammaln(m - n + 1)
    log_p = log_binom + n * math.log(eta) + (m - n) * math.log(1.0 - eta)
    amps[: m + 1] = np.exp(0.5 * log_p)
    return amps / np.linalg.norm(amps)


def photon_added_coherent(lam: float, m: int, dim: int) -> FockVector:
    """Normalized a^dag^M |lambda> for real lambda >= 0; support on n >= M only.

    The mathematical normalization constant is 1/sqrt(M! L_M(-lambda^2)).
    """
    lam = float(lam)
    m = int(m)
    dim = int(dim)
    if lam < 0:
        raise ValidationError(f"lambda must be >= 0, got {lam}")
    if m < 0:
        raise ValidationError(f"M must be >= 0, got {m}")
    if dim < m + 1:
        raise ValidationError(f"dim={dim} too small to hold level M={m}")
    amps = np.zeros(dim, dtype=complex)
    if lam == 0.0:
        amps[m] = 1.0
        return amps
    j = np.arange(dim - m)
    log_a = -0.5 * lam * lam + j * math.log(lam) + 0.5 * gammaln(m + j + 1) - gammaln(j + 1)
    weights = np.exp(2.0 * log_a)
    if weights.size >= 2 and weights[-1] > 0:
        ratio = weights[-1] / weights[-2]
        if ratio >= 1.0:
            raise TruncationError(f"photon-added coherent tail still growing at dim={dim}")
        tail = weights[-1] * ratio / (1.0 - ratio)
        if tail / np.sum(weights) >= 1e-12:
            raise TruncationError(
                f"photon-added coherent state loses ~{tail / np.sum(weights):.3e} mass at dim={dim}"
            )
    amps[m:] = np.exp(log_a)
    return amps / np.linalg.norm(amps)


def lower_k(params: IntermediateParams, k: int) -> tuple[float, IntermediateParams | None]:
    """Closed-form coefficient and parameters of a^k ||eta,M>.

    a^k ||eta,M> = sqrt(M (M-1) ... (M-k+1) L_{M-k}(-l^2) / L_M(-l^2)) ||eta,M-k>
    for k <= M; the coefficient is 0 (with no surviving state) for k > M.
    """
    k = int(k)
    if k < 0:
        raise ValidationError(f"k must be >= 0, got {k}")
    m = params.m
    if k > m:
        return 0.0, None
    if k == 0:
        return 1.0, params
    s = params.lambda_sq
    log_coeff_sq = (
        math.lgamma(m + 1)
        - math.lgamma(m - k + 1)
        + sf.log_laguerre_negarg(m - k, s).log_magnitude
        - sf.log_laguerre_negarg(m, s).log_magnitude
    )
    return math.exp(0.5 * log_coeff_sq), IntermediateParams(params.eta, m - k)


def general_eigenvector_prefix(eta: float, beta: complex, n_terms: int) -> np.ndarray:
    """Unnormalized leading coefficients of the formal eigenvector for complex beta.

    C_0 = 1 and sqrt(1-eta) sqrt(n+1) C_{n+1} = (beta - sqrt(eta) n) C_n.
    For beta / sqrt(eta) not a nonnegative integer the series never truncates
    and no claim is made about its normalizability; this generator exists for
    residual checks on finite prefixes only.
    """
    eta = float(eta)
    if not 0.0 < eta < 1.0:
        raise ValidationError(f"eta must be in (0, 1) for the general prefix, got {eta}")
    n_terms = int(n_terms)
    if n_terms < 1:
        raise ValidationError("need at least one coefficient")
    coeffs = np.zeros(n_terms, dtype=complex)
    coeffs[0] = 1.0
    root_eta = math.sqrt(eta)
    root_one_minus = math.sqrt(1.0 - eta)
    for n in range(n_terms - 1):
        coeffs[n + 1] = (beta - root_eta * n) * coeffs[n] / (root_one_minus * math.sqrt(n + 1))
    return coeffs
