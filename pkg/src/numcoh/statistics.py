"""Photon statistics and quadrature moments, closed form and brute force.

Closed forms are ratios of (associated) Laguerre polynomials at -lambda^2,
evaluated as differences of log-domain sums.  The brute-force companions sum
directly over amplitudes or ladder-matrix elements and serve as independent
oracles at every point of the parameter space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import special_fns as sf
from .errors import TruncationError
from .fock_space import FockVector, ladder_matrices
from .states import IntermediateParams

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class MomentReport:
    """Photon-number moments; g2 is None when the mean is zero (vacuum)."""

    mean_n: float
    mean_n2: float
    mandel_q: float
    g2: float | None


@dataclass(frozen=True)
class QuadratureReport:
    """Moments of x = (a + a^dag)/sqrt(2) and p = (a - a^dag)/(i sqrt(2))."""

    mean_x: float
    mean_p: float
    var_x: float
    var_p: float
    snr: float


def moments_closed(params: IntermediateParams) -> MomentReport:
    """Closed-form <N>, <N^2>, Mandel Q and g2(0) for ||eta,M>.

    <N>   = M L_{M-1}(-l^2) / L_M(-l^2)
    <N^2> = (M (M-1) L_{M-2}(-l^2) + M L_{M-1}(-l^2)) / L_M(-l^2)

    At M = 0 the state is the vacuum: Q is reported as 0 (the Poissonian
    value it approaches along the eta -> 0 family) and g2 as undefined.
    """
    m = params.m
    if m == 0:
        return MomentReport(mean_n=0.0, mean_n2=0.0, mandel_q=0.0, g2=None)
    s = params.lambda_sq
    log_lm = sf.log_laguerre_negarg(m, s).log_magnitude
    log_lm1 = sf.log_laguerre_negarg(m - 1, s).log_magnitude
    mean = m * math.exp(log_lm1 - log_lm)
    if m >= 2:
        log_lm2 = sf.log_laguerre_negarg(m - 2, s).log_magnitude
        mean_pairs = m * (m - 1) * math.exp(log_lm2 - log_lm)  # <N(N-1)>
    else:
        mean_pairs = 0.0
    mean_n2 = mean_pairs + mean
    variance = mean_n2 - mean * mean
    mandel_q = variance / mean - 1.0
    g2 = mean_pairs / (mean * mean)
    return MomentReport(mean_n=mean, mean_n2=mean_n2, mandel_q=mandel_q, g2=g2)


def moments_direct(state: FockVector) -> MomentReport:
    """Photon-number moments by direct summation over |c_n|^2."""
    p = np.abs(np.asarray(state, dtype=complex)) ** 2
    p = p / p.sum()
    n = np.arange(p.size, dtype=float)
    mean = float(np.dot(n, p))
    mean_n2 = float(np.dot(n * n, p))
    if mean == 0.0:
        return MomentReport(mean_n=0.0, mean_n2=mean_n2, mandel_q=0.0, g2=None)
    variance = mean_n2 - mean * mean
    return MomentReport(
        mean_n=mean,
        mean_n2=mean_n2,
        mandel_q=variance / mean - 1.0,
        g2=(mean_n2 - mean) / (mean * mean),
    )


def quadratures_closed(params: IntermediateParams) -> QuadratureReport:
    """Closed-form quadrature moments of ||eta,M>.

    (dx)^2 = 1/2 + <N> + l^2 L^{(2)}_{M-2}(-l^2)/L_M(-l^2) - <x>^2 with
    <x> = sqrt(2) l L^{(1)}_{M-1}(-l^2) / L_M(-l^2); the L^{(2)} term flips
    sign in (dp)^2 and <p> = 0 since all amplitudes are real.
    """
    m = params.m
    lam = params.lam
    s = params.lambda_sq
    if m == 0 or lam == 0.0:
        # vacuum or number state: no coherent displacement, no a^2 coherence
        mean = float(m) if lam == 0.0 else 0.0
        return QuadratureReport(
            mean_x=0.0, mean_p=0.0, var_x=mean + 0.5, var_p=mean + 0.5, snr=0.0
        )
    log_lm = sf.log_laguerre_negarg(m, s).log_magnitude
    mean = m * math.exp(sf.log_laguerre_negarg(m - 1, s).log_magnitude - log_lm)
    mean_x = _SQRT2 * lam * math.exp(
        sf.log_assoc_laguerre_negarg(m - 1, 1, s).log_magnitude - log_lm
    )
    if m >= 2:
        mean_aa = lam * lam * math.exp(
            sf.log_assoc_laguerre_negarg(m - 2, 2, s).log_magnitude - log_lm
        )
    else:
        mean_aa = 0.0
    var_x = 0.5 + mean + mean_aa - mean_x * mean_x
    var_p = 0.5 + mean - mean_aa
    return QuadratureReport(
        mean_x=mean_x, mean_p=0.0, var_x=var_x, var_p=var_p, snr=mean_x * mean_x / var_x
    )


def _support_top(state: np.ndarray, cutoff: float = 1e-9) -> int:
    idx = np.nonzero(np.abs(state) > cutoff)[0]
    return int(idx[-1]) if idx.size else 0


def quadratures_direct(state: FockVector) -> QuadratureReport:
    """Quadrature moments via ladder matrices; needs >= 2 levels of headroom."""
    psi = np.asarray(state, dtype=complex)
    dim = psi.size
    if _support_top(psi) + 2 >= dim:
        raise TruncationError(
            f"state support reaches level {_support_top(psi)} of dim {dim}; "
            "need >= 2 empty levels for quadratic quadrature moments"
        )
    a, adag, _ = ladder_matrices(dim)
    x = (a + adag) / _SQRT2
    p = (a - adag) / (1j * _SQRT2)
    mean_x = float(np.real(np.vdot(psi, x @ psi)))
    mean_p = float(np.real(np.vdot(psi, p @ psi)))
    var_x = float(np.real(np.vdot(psi, x @ (x @ psi)))) - mean_x * mean_x
    var_p = float(np.real(np.vdot(psi, p @ (p @ psi)))) - mean_p * mean_p
    return QuadratureReport(
        mean_x=mean_x, mean_p=mean_p, var_x=var_x, var_p=var_p, snr=mean_x * mean_x / var_x
    )
