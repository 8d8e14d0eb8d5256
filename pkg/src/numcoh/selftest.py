"""Built-in invariant suite: every module's key identities at reduced density.

Each check raises AssertionError on failure; the runner times the checks,
prints one line per check in a fixed order and reports overall success.
The ``inject_fault`` hook corrupts a known quantity so callers can verify
the harness actually detects faults.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import special_fns as sf
from .fock_space import coherent_vector, default_dim, displacement_matrix, ladder_matrices
from .generation import DriveParams, KerrParams, drive_frame_identity_defect, generate_by_detection, kerr_output
from .jcm_dynamics import (
    JcmParams,
    atomic_density,
    entropy,
    evolve,
    field_entropy,
    inversion,
    photon_distribution,
)
from .quasiprob import (
    PhaseGrid,
    half_max_widths,
    husimi_closed,
    husimi_direct,
    integrate,
    midpoint_grid,
    rasterize,
    wigner_closed,
    wigner_oracle,
)
from .states import IntermediateParams, binomial_state, eigen_residual, intermediate_state, lower_k
from .statistics import moments_closed, moments_direct, quadratures_closed, quadratures_direct

_PI = math.pi

KNOWN_FAULTS = ("lambda-sign",)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""


def _check_laguerre_recurrence(_fault):
    for m in (1, 5, 20, 60, 100):
        for x in (-50.0, -7.5, -1.0, 0.0, 1.0, 12.5, 50.0):
            lm1 = sf.laguerre(m - 1, x) if m >= 1 else 0.0
            lm = sf.laguerre(m, x)
            lp1 = sf.laguerre(m + 1, x)
            lhs = (m + 1) * lp1
            rhs = (2 * m + 1 - x) * lm - m * lm1
            scale = max(abs(lhs), abs(rhs), 1.0)
            assert abs(lhs - rhs) <= 1e-10 * scale, f"recurrence broke at m={m}, x={x}"


def _check_log_linear_consistency(_fault):
    for m in (0, 1, 3, 10, 40):
        for s in (0.0, 0.3, 1.0, 9.0, 25.0):
            linear = sf.laguerre(m, -s)
            logged = sf.log_laguerre_negarg(m, s).to_float()
            assert abs(linear - logged) <= 1e-10 * abs(linear)
            assert linear >= 1.0


def _check_ladder_commutator(_fault):
    dim = 12
    a, adag, _ = ladder_matrices(dim)
    comm = a @ adag - adag @ a
    expected = np.eye(dim)
    expected[-1, -1] = 1.0 - dim
    assert np.abs(comm - expected).max() < 1e-12


def _check_displacement_covariance(_fault):
    lam, block = 0.8, 24
    dim = default_dim(block, lam)
    _, adag, _ = ladder_matrices(dim)
    lhs = displacement_matrix(-lam, dim) @ adag @ displacement_matrix(lam, dim)
    rhs = adag + lam * np.eye(dim)
    assert np.abs((lhs - rhs)[:block, :block]).max() < 1e-8


def _check_displacement_composition(_fault):
    delta, gamma, block = 0.5 + 0.3j, -0.2 + 0.7j, 16
    dim = default_dim(block, abs(delta) + abs(gamma))
    lhs = displacement_matrix(delta, dim) @ displacement_matrix(gamma, dim)
    phase = np.exp(1j * (delta * np.conj(gamma)).imag)
    rhs = displacement_matrix(delta + gamma, dim) * phase
    assert np.abs((lhs - rhs)[:block, :block]).max() < 1e-8


def _check_displacement_norms(_fault):
    dim = default_dim(4, 1.5)
    d = displacement_matrix(1.5j, dim)
    state = coherent_vector(1.0, dim)
    assert abs(np.linalg.norm(d @ state) - 1.0) < 1e-8


def _check_eigen_residual(fault):
    for eta in (0.2, 0.5, 0.9):
        for m in (0, 1, 4, 15):
            params = IntermediateParams(eta, m)
            state = intermediate_state(params, m + 4)
            if fault == "lambda-sign":
                signs = np.array([(-1.0) ** (m - n) for n in range(m + 4)])
                state = state * signs
            assert eigen_residual(state, params) < 1e-10, (
                f"eigenvalue residual too large at eta={eta}, M={m}"
            )


def _check_lowering_oracle(_fault):
    for eta in (0.1, 0.5, 0.9):
        for m in (1, 4, 9):
            params = IntermediateParams(eta, m)
            dim = m + 3
            a, _, _ = ladder_matrices(dim)
            for k in range(m + 1):
                vec = intermediate_state(params, dim)
                for _ in range(k):
                    vec = a @ vec
                coeff, lowered = lower_k(params, k)
                expected = coeff * intermediate_state(lowered, dim)
                assert np.abs(vec - expected).max() < 1e-10 * max(1.0, coeff)


def _check_coherent_limit(_fault):
    overlaps = []
    for m in (25, 100, 400):
        params = IntermediateParams(1.0 / m**2, m)
        state = intermediate_state(params, m + 1)
        coh = coherent_vector(1.0, m + 1)
        overlaps.append(abs(np.vdot(coh, state)) ** 2)
    assert overlaps[0] < overlaps[1] < overlaps[2], "overlap not increasing toward the limit"
    assert overlaps[-1] > 0.999


def _check_finite_support_positivity(_fault):
    state = intermediate_state(IntermediateParams(0.35, 6), 12)
    assert np.all(state[7:] == 0.0)
    assert np.all(state[:7].real >= 0.0) and np.abs(state.imag).max() == 0.0


def _check_stats_closed_vs_direct(_fault):
    for eta in (0.1, 0.5, 0.9):
        for m in (1, 7, 25):
            params = IntermediateParams(eta, m)
            state = intermediate_state(params, m + 4)
            mc, md = moments_closed(params), moments_direct(state)
            qc, qd = quadratures_closed(params), quadratures_direct(state)
            for a, b in (
                (mc.mean_n, md.mean_n),
                (mc.mean_n2, md.mean_n2),
                (mc.mandel_q, md.mandel_q),
                (qc.var_x, qd.var_x),
                (qc.var_p, qd.var_p),
            ):
                assert abs(a - b) <= 1e-9 * max(abs(a), abs(b), 1e-6)


def _check_sub_poissonian(_fault):
    for eta in (0.05, 0.3, 0.6, 0.95, 1.0):
        for m in (1, 5, 40):
            assert moments_closed(IntermediateParams(eta, m)).mandel_q < 0.0


def _check_snr_bound_and_squeezing(_fault):
    etas = np.linspace(0.0125, 1.0, 80)
    squeezed_somewhere = False
    for eta in etas:
        params = IntermediateParams(float(eta), 10)
        q = quadratures_closed(params)
        mean = moments_closed(params).mean_n
        assert q.snr <= 4.0 * mean * (mean + 1.0) + 1e-9
        if q.snr > 4.0 * mean:
            assert q.var_x < 0.5, "large-ratio point outside the squeezing region"
        if q.var_x < 0.5:
            squeezed_somewhere = True
    assert squeezed_somewhere
    assert quadratures_closed(IntermediateParams(1.0, 10)).var_x == 10.5
    near_zero = quadratures_closed(IntermediateParams(1e-6, 10)).var_x
    assert abs(near_zero - 0.5) < 1e-4


def _check_binomial_baseline(_fault):
    for m in (2, 50, 100):
        for eta in (0.1, 0.5, 0.9):
            q = moments_direct(binomial_state(eta, m, m + 1)).mandel_q
            assert abs(q + eta) < 1e-12


def _check_husimi_cross_oracle(_fault):
    for eta in (0.3, 0.7):
        for m in (1, 4):
            params = IntermediateParams(eta, m)
            state = intermediate_state(params, m + 1)
            for beta in (0.0, 1.0, -1.0 + 1.0j, 0.3 - 0.8j):
                closed = husimi_closed(params, beta)
                direct = husimi_direct(state, beta)
                assert abs(closed - direct) < 1e-12
            assert husimi_closed(params, -params.lam) == 0.0


def _check_wigner_cross_oracle(_fault):
    for eta in (0.3, 0.7):
        for m in (1, 3):
            params = IntermediateParams(eta, m)
            state = intermediate_state(params, m + 1)
            for beta in (0.0, 0.5, -0.4 + 0.6j):
                assert abs(wigner_closed(params, beta) - wigner_oracle(state, beta)) < 1e-8


def _check_quasiprob_normalization(_fault):
    params = IntermediateParams(0.5, 10)
    grid = midpoint_grid(-6.0, 6.0, -6.0, 6.0, 101, 101)
    q_total = integrate(rasterize(lambda b: husimi_closed(params, b), grid))
    w_total = integrate(rasterize(lambda b: wigner_closed(params, b), grid))
    assert abs(q_total - 1.0) < 5e-3
    assert abs(w_total - 1.0) < 5e-3


def _check_squeezing_contour(_fault):
    params = IntermediateParams(0.2, 10)
    grid = PhaseGrid(-6.0, 6.0, -6.0, 6.0, 161, 161)
    field = rasterize(lambda b: husimi_closed(params, b), grid)
    width_x, width_y = half_max_widths(field)
    assert 0.0 < width_x < width_y, f"contour not x-squeezed: {width_x} vs {width_y}"


def _check_jcm_unitarity_and_paths(_fault):
    params = JcmParams(g=1.0, delta=0.0)
    state = intermediate_state(IntermediateParams(0.8, 30), 31)
    rng = np.random.default_rng(7)
    for t, delta in zip(rng.uniform(0, _PI, 25), rng.uniform(-3, 3, 25)):
        joint = evolve(JcmParams(g=1.0, delta=float(delta)), state, float(t))
        assert abs(joint.norm_sq() - 1.0) < 1e-12
    for tau in np.linspace(0.0, _PI, 200):
        closed = inversion(params, state, float(tau))
        joint = evolve(params, state, float(tau))
        branch = float(np.sum(np.abs(joint.e_branch) ** 2) - np.sum(np.abs(joint.g_branch) ** 2))
        assert abs(closed - branch) < 1e-10


def _check_jcm_entropy_equality(_fault):
    params = JcmParams(g=1.0, delta=0.0)
    state = intermediate_state(IntermediateParams(0.6, 20), 21)
    assert entropy(atomic_density(params, state, 0.0)) < 1e-12
    for tau in np.linspace(0.05, _PI, 24):
        s_atom = entropy(atomic_density(params, state, float(tau)))
        s_field = field_entropy(params, state, float(tau))
        assert abs(s_atom - s_field) < 1e-8


def _check_jcm_rabi_and_revival(_fault):
    params = JcmParams(g=1.0, delta=0.0)
    taus = np.linspace(0.0, _PI, 1200)
    rabi_state = intermediate_state(IntermediateParams(0.999, 4), 5)
    omega4 = params.rabi(4.0)
    devs = [
        abs(inversion(params, rabi_state, float(t)) - math.cos(2.0 * omega4 * t)) for t in taus
    ]
    assert max(devs) < 1e-2
    coherent_like = intermediate_state(IntermediateParams(0.001, 200), 201)
    w = np.array([inversion(params, coherent_like, float(t)) for t in taus])
    collapse = np.abs(w[(taus > 1.0) & (taus < 2.0)]).max()
    revival_window = taus > 2.0
    peak = float(np.abs(w[revival_window]).max())
    peak_tau = float(taus[revival_window][np.abs(w[revival_window]).argmax()])
    assert peak > 3.0 * collapse, "no revival above the collapsed background"
    assert abs(peak_tau - _PI) <= 0.3


def _check_jcm_distribution_identities(_fault):
    params = JcmParams(g=1.0, delta=0.0)
    field = IntermediateParams(0.8, 70)
    state = intermediate_state(field, 71)
    p0 = photon_distribution(params, state, 0.0)
    p_pi = photon_distribution(params, state, _PI)
    shifted = np.zeros_like(p0)
    shifted[2:] = p0[:-2]
    assert 0.5 * np.abs(p_pi - shifted).sum() < 0.05
    p_half = photon_distribution(params, state, _PI / 2)
    assert 0.5 * np.abs(p_half - 0.5 * (p0 + p_pi)).sum() < 0.05
    for p in (p0, p_pi, p_half):
        assert abs(p.sum() - 1.0) < 1e-12 and p.min() >= 0.0


def _check_frequency_asymptotics(_fault):
    for n, tol in ((1_000, 1e-3), (1_000_000, 1e-6)):
        split = math.sqrt((n + 1.0) * (n + 2.0)) - (n + 1.5)
        assert abs(split) < tol


def _check_generation_sweep(_fault):
    for ratio in (0.0, 1.0, 5.0):
        drive = DriveParams(A=ratio, omega=1.0, g=1.0)
        field, prob = generate_by_detection(drive, 1e-3)
        target = intermediate_state(IntermediateParams(drive.predicted_eta, 1), field.size)
        fidelity = abs(np.vdot(target, field)) ** 2
        assert fidelity > 1.0 - 1e-4
        assert prob > 0.0


def _check_generation_scaling(_fault):
    drive = DriveParams(A=1.0, omega=1.0, g=1.0)
    _, p1 = generate_by_detection(drive, 1e-3)
    _, p2 = generate_by_detection(drive, 2e-3)
    ratio = p2 / p1
    assert abs(ratio - 4.0) < 0.8, f"detection probability not O((gt)^2): ratio {ratio}"


def _check_drive_frame_identity(_fault):
    drive = DriveParams(A=0.5, omega=1.0, g=1.0)
    assert drive_frame_identity_defect(drive, 1.0, dim=64) < 1e-8
    quiet = DriveParams(A=0.0, omega=1.0, g=1.0)
    assert drive_frame_identity_defect(quiet, 1.3, dim=48) < 1e-10


def _check_kerr_first_order(_fault):
    lam = 1.0
    dim = 256
    target = intermediate_state(IntermediateParams(1.0 / (1.0 + lam**2), 2), dim)
    vacuum = np.zeros(dim, dtype=complex)
    vacuum[0] = 1.0
    norm_factor = math.sqrt(2.0 * sf.laguerre(2, -lam**2))
    for gamma in (1e-2, 1e-3):
        out = kerr_output(KerrParams(gamma=gamma, lam=lam), dim=dim)
        # target is not orthogonal to the vacuum: decompose in their span
        gram = np.array([[1.0, np.vdot(vacuum, target)], [np.vdot(target, vacuum), 1.0]])
        rhs = np.array([np.vdot(vacuum, out), np.vdot(target, out)])
        component = abs(np.linalg.solve(gram, rhs)[1])
        expected = 0.5 * gamma * lam**2 * norm_factor
        assert abs(component / expected - 1.0) < 0.05, (
            f"first-order component off at gamma={gamma}: {component} vs {expected}"
        )


CHECKS = (
    ("special-laguerre-recurrence", _check_laguerre_recurrence),
    ("special-log-linear-consistency", _check_log_linear_consistency),
    ("fock-ladder-commutator", _check_ladder_commutator),
    ("fock-displacement-covariance", _check_displacement_covariance),
    ("fock-displacement-composition", _check_displacement_composition),
    ("fock-displacement-norms", _check_displacement_norms),
    ("states-eigen-residual", _check_eigen_residual),
    ("states-lowering-oracle", _check_lowering_oracle),
    ("states-coherent-limit", _check_coherent_limit),
    ("states-finite-support-positivity", _check_finite_support_positivity),
    ("stats-closed-vs-direct", _check_stats_closed_vs_direct),
    ("stats-sub-poissonian", _check_sub_poissonian),
    ("stats-snr-bound-and-squeezing", _check_snr_bound_and_squeezing),
    ("stats-binomial-baseline", _check_binomial_baseline),
    ("quasi-husimi-cross-oracle", _check_husimi_cross_oracle),
    ("quasi-wigner-cross-oracle", _check_wigner_cross_oracle),
    ("quasi-normalization", _check_quasiprob_normalization),
    ("quasi-squeezing-contour", _check_squeezing_contour),
    ("jcm-unitarity-and-inversion-paths", _check_jcm_unitarity_and_paths),
    ("jcm-entropy-equality", _check_jcm_entropy_equality),
    ("jcm-rabi-and-revival", _check_jcm_rabi_and_revival),
    ("jcm-distribution-identities", _check_jcm_distribution_identities),
    ("jcm-frequency-asymptotics", _check_frequency_asymptotics),
    ("generation-detection-sweep", _check_generation_sweep),
    ("generation-detection-scaling", _check_generation_scaling),
    ("generation-drive-frame-identity", _check_drive_frame_identity),
    ("generation-kerr-first-order", _check_kerr_first_order),
)


def run_selftest(inject_fault: str | None = None, report=print) -> list[CheckResult]:
    """Run every check in order; returns the per-check results.

    ``inject_fault`` corrupts a known quantity ("lambda-sign" flips the sign
    pattern of the state handed to the eigenvalue-residual check) so the
    harness's sensitivity can be demonstrated.
    """
    if inject_fault is not None and inject_fault not in KNOWN_FAULTS:
        raise ValueError(f"unknown fault {inject_fault!r}; known: {KNOWN_FAULTS}")
    results = []
    for name, check in CHECKS:
        started = time.perf_counter()
        try:
            check(inject_fault)
            result = CheckResult(name, True, time.perf_counter() - started)
        except Exception as exc:  # noqa: BLE001 - a failing check must not stop the suite
            result = CheckResult(name, False, time.perf_counter() - started, detail=str(exc))
        results.append(result)
        status = "PASS" if result.passed else "FAIL"
        line = f"{status} {result.name} ({result.seconds:.3f}s)"
        if result.detail:
            line += f": {result.detail}"
        report(line)
    failed = sum(1 for r in results if not r.passed)
    report(f"{len(results) - failed}/{len(results)} checks passed")
    return results
