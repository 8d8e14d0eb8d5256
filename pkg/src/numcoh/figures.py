"""Figure dataset builders: nine reproducible CSV bundles.

Each builder returns an ordered mapping {filename: csv_text} with the
parameter choices of the published curves baked in:

  fig1  Mandel Q vs eta for M = 2, 50, 100 plus the binomial baseline -eta
  fig2  (dx)^2 vs eta for M = 2, 20, 50, 200
  fig3  signal-to-noise: (a) M = 2, 10, 50; (b) M = 10 against its bounds
  fig4  Wigner rasters, M = 3, eta = 0.1, 0.4, 0.7, 1, plus a vacuum-limit panel
  fig5  Husimi rasters, M = 10, six eta values spanning the squeezing window
  fig6  inversion vs tau for (M, eta) = (4,.999), (70,.8), (70,.1), (200,.001)
  fig7  entropy vs tau for (4,.9999), (70,.8), (70,.1), (200,.005)
  fig8  field Q rasters at tau = 0, pi/4, pi/2, 3pi/4, pi for eta = 0.1, 0.8
  fig9  photon distributions at the fig8 snapshot times plus the shifted
        times pi/4 - xi and 3pi/4 - xi with xi = 1/140 (eta=0.1), 1/180 (eta=0.8)

All dynamics use scaled time tau = g t with g = 1 on tau in [0, pi].
"""

from __future__ import annotations

import math

import numpy as np

from .csvio import render_csv
from .jcm_dynamics import JcmParams, atomic_density, entropy, field_qfunction, inversion, photon_distribution
from .quasiprob import PhaseGrid, husimi_closed, rasterize, wigner_closed
from .states import IntermediateParams, intermediate_state
from .statistics import moments_closed, quadratures_closed

_PI = math.pi

DEFAULT_ETA_POINTS = 401
DEFAULT_TAU_POINTS = 2001

_FIG4_ETAS = (0.1, 0.4, 0.7, 1.0)
_FIG4_VACUUM_ETA = 1e-4  # lambda ~ 100: indistinguishable from the vacuum on the grid
_FIG5_ETAS = (0.05, 0.2, 0.4, 0.6, 0.8, 0.95)
_FIG6_CASES = (("fig6a", 4, 0.999), ("fig6b", 70, 0.8), ("fig6c", 70, 0.1), ("fig6d", 200, 0.001))
_FIG7_CASES = (("fig7a", 4, 0.9999), ("fig7b", 70, 0.8), ("fig7c", 70, 0.1), ("fig7d", 200, 0.005))
_FIG89_M = 70
_FIG89_ETAS = (0.1, 0.8)
_FIG9_XI = {0.1: 1.0 / 140.0, 0.8: 1.0 / 180.0}
_SNAPSHOTS = (("tau0", 0.0), ("taupi4", _PI / 4), ("taupi2", _PI / 2), ("tau3pi4", 3 * _PI / 4), ("taupi", _PI))

_JCM = JcmParams(g=1.0, delta=0.0)


def eta_sweep(n_eta: int = DEFAULT_ETA_POINTS) -> np.ndarray:
    """eta grid i/n for i = 1..n: excludes the singular eta = 0, ends at 1."""
    n_eta = int(n_eta)
    if n_eta < 2:
        raise ValueError("need at least 2 sweep points")
    return np.arange(1, n_eta + 1) / float(n_eta)


def _eta_tag(eta: float) -> str:
    return f"eta{eta:g}"


def build_fig1(n_eta: int = DEFAULT_ETA_POINTS, **_) -> dict[str, str]:
    rows = []
    for eta in eta_sweep(n_eta):
        row = [float(eta)]
        for m in (2, 50, 100):
            row.append(moments_closed(IntermediateParams(eta, m)).mandel_q)
        row.append(-float(eta))  # binomial-state value, exact for every M
        rows.append(row)
    return {"fig1.csv": render_csv(("eta", "q_m2", "q_m50", "q_m100", "q_binomial"), rows)}


def build_fig2(n_eta: int = DEFAULT_ETA_POINTS, **_) -> dict[str, str]:
    rows = []
    for eta in eta_sweep(n_eta):
        row = [float(eta)]
        for m in (2, 20, 50, 200):
            row.append(quadratures_closed(IntermediateParams(eta, m)).var_x)
        rows.append(row)
    return {"fig2.csv": render_csv(("eta", "var_x_m2", "var_x_m20", "var_x_m50", "var_x_m200"), rows)}


def build_fig3(n_eta: int = DEFAULT_ETA_POINTS, **_) -> dict[str, str]:
    rows_a, rows_b = [], []
    for eta in eta_sweep(n_eta):
        row = [float(eta)]
        for m in (2, 10, 50):
            row.append(quadratures_closed(IntermediateParams(eta, m)).snr)
        rows_a.append(row)
        params = IntermediateParams(eta, 10)
        mean = moments_closed(params).mean_n
        rows_b.append(
            [float(eta), quadratures_closed(params).snr, 4.0 * mean, 4.0 * mean * (mean + 1.0)]
        )
    return {
        "fig3a.csv": render_csv(("eta", "snr_m2", "snr_m10", "snr_m50"), rows_a),
        "fig3b.csv": render_csv(("eta", "snr", "bound_4n", "bound_4n_np1"), rows_b),
    }


def build_fig4(grid_points: int = 101, **_) -> dict[str, str]:
    grid = PhaseGrid(-4.0, 4.0, -4.0, 4.0, grid_points, grid_points)
    out = {}
    for eta in _FIG4_ETAS:
        params = IntermediateParams(eta, 3)
        field = rasterize(lambda b: wigner_closed(params, b), grid)
        out[f"fig4_{_eta_tag(eta)}.csv"] = field.to_csv_text()
    vac = IntermediateParams(_FIG4_VACUUM_ETA, 3)
    out["fig4_vacuum.csv"] = rasterize(lambda b: wigner_closed(vac, b), grid).to_csv_text()
    return out


def build_fig5(grid_points: int = 101, **_) -> dict[str, str]:
    grid = PhaseGrid(-6.0, 6.0, -6.0, 6.0, grid_points, grid_points)
    out = {}
    for eta in _FIG5_ETAS:
        params = IntermediateParams(eta, 10)
        field = rasterize(lambda b: husimi_closed(params, b), grid)
        out[f"fig5_{_eta_tag(eta)}.csv"] = field.to_csv_text()
    return out


def build_fig6(n_tau: int = DEFAULT_TAU_POINTS, **_) -> dict[str, str]:
    out = {}
    taus = np.linspace(0.0, _PI, int(n_tau))
    for name, m, eta in _FIG6_CASES:
        state = intermediate_state(IntermediateParams(eta, m), m + 1)
        rows = [(float(tau), inversion(_JCM, state, float(tau))) for tau in taus]
        out[f"{name}.csv"] = render_csv(("tau", "inversion"), rows)
    return out


def build_fig7(n_tau: int = DEFAULT_TAU_POINTS, **_) -> dict[str, str]:
    out = {}
    taus = np.linspace(0.0, _PI, int(n_tau))
    for name, m, eta in _FIG7_CASES:
        state = intermediate_state(IntermediateParams(eta, m), m + 1)
        rows = [(float(tau), entropy(atomic_density(_JCM, state, float(tau)))) for tau in taus]
        out[f"{name}.csv"] = render_csv(("tau", "entropy"), rows)
    return out


def build_fig8(grid_points: int = 101, **_) -> dict[str, str]:
    grid = PhaseGrid(-12.0, 12.0, -12.0, 12.0, grid_points, grid_points)
    out = {}
    for eta in _FIG89_ETAS:
        state = intermediate_state(IntermediateParams(eta, _FIG89_M), _FIG89_M + 1)
        for tag, tau in _SNAPSHOTS:
            field = rasterize(lambda b: field_qfunction(_JCM, state, tau, b), grid)
            out[f"fig8_{_eta_tag(eta)}_{tag}.csv"] = field.to_csv_text(value_label="q")
    return out


def build_fig9(**_) -> dict[str, str]:
    out = {}
    for eta in _FIG89_ETAS:
        state = intermediate_state(IntermediateParams(eta, _FIG89_M), _FIG89_M + 1)
        xi = _FIG9_XI[eta]
        times = list(_SNAPSHOTS)
        times.append(("taupi4shift", _PI / 4 - xi))
        times.append(("tau3pi4shift", 3 * _PI / 4 - xi))
        for tag, tau in times:
            pn = photon_distribution(_JCM, state, tau)
            rows = [(int(n), float(p)) for n, p in enumerate(pn)]
            out[f"fig9_{_eta_tag(eta)}_{tag}.csv"] = render_csv(("n", "p_n"), rows)
    return out


FIGURE_BUILDERS = {
    "fig1": build_fig1,
    "fig2": build_fig2,
    "fig3": build_fig3,
    "fig4": build_fig4,
    "fig5": build_fig5,
    "fig6": build_fig6,
    "fig7": build_fig7,
    "fig8": build_fig8,
    "fig9": build_fig9,
}

#: Documented output contract: filenames each figure command writes.
FIGURE_FILES = {
    "fig1": ("fig1.csv",),
    "fig2": ("fig2.csv",),
    "fig3": ("fig3a.csv", "fig3b.csv"),
    "fig4": tuple(f"fig4_{_eta_tag(e)}.csv" for e in _FIG4_ETAS) + ("fig4_vacuum.csv",),
    "fig5": tuple(f"fig5_{_eta_tag(e)}.csv" for e in _FIG5_ETAS),
    "fig6": tuple(f"{name}.csv" for name, _, _ in _FIG6_CASES),
    "fig7": tuple(f"{name}.csv" for name, _, _ in _FIG7_CASES),
    "fig8": tuple(
        f"fig8_{_eta_tag(e)}_{tag}.csv" for e in _FIG89_ETAS for tag, _ in _SNAPSHOTS
    ),
    "fig9": tuple(
        f"fig9_{_eta_tag(e)}_{tag}.csv"
        for e in _FIG89_ETAS
        for tag in [t for t, _ in _SNAPSHOTS] + ["taupi4shift", "tau3pi4shift"]
    ),
}


def build_figure(fig_id: str, **kwargs) -> dict[str, str]:
    """Build one figure's CSV bundle; kwargs tune sweep densities."""
    if fig_id not in FIGURE_BUILDERS:
        raise KeyError(f"unknown figure id {fig_id!r}")
    return FIGURE_BUILDERS[fig_id](**kwargs)
