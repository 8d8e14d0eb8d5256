"""Husimi Q and Wigner functions: closed forms, oracles and rasterization.

Conventions: both quasiprobabilities integrate to 1 over the complex plane,
i.e. Q(beta) = (1/pi) <beta|rho|beta> and the Wigner function carries the
2/pi prefactor of the displaced-number-state (parity-weighted) expansion

    W(beta) = (2/pi) sum_k (-1)^k <beta,k|rho|beta,k>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import special_fns as sf
from .csvio import render_csv
from .errors import NumcohError, TruncationError, ValidationError
from .fock_space import FockVector, default_dim, displacement_matrix
from .states import IntermediateParams

_PI = math.pi


@dataclass(frozen=True)
class PhaseGrid:
    """Rectangular grid in the complex plane: point (i, j) -> x_i + i y_j."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int

    def __post_init__(self):
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            raise ValidationError("grid bounds must satisfy x_max > x_min, y_max > y_min")
        if self.nx < 1 or self.ny < 1:
            raise ValidationError("grid must have at least one point per axis")

    def xs(self) -> np.ndarray:
        if self.nx == 1:
            return np.array([0.5 * (self.x_min + self.x_max)])
        return np.linspace(self.x_min, self.x_max, self.nx)

    def ys(self) -> np.ndarray:
        if self.ny == 1:
            return np.array([0.5 * (self.y_min + self.y_max)])
        return np.linspace(self.y_min, self.y_max, self.ny)


@dataclass(frozen=True)
class ScalarField:
    """Real values sampled on a PhaseGrid; values[i, j] belongs to x_i + i y_j."""

    grid: PhaseGrid
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (self.grid.nx, self.grid.ny):
            raise ValidationError(
                f"value array {self.values.shape} does not match grid "
                f"({self.grid.nx}, {self.grid.ny})"
            )

    def to_csv_text(self, value_label: str = "value") -> str:
        """Serialize as "x,y,<label>" rows in row-major order, 17 significant digits."""
        xs, ys = self.grid.xs(), self.grid.ys()
        rows = (
            (float(xs[i]), float(ys[j]), float(self.values[i, j]))
            for i in range(self.grid.nx)
            for j in range(self.grid.ny)
        )
        return render_csv(("x", "y", value_label), rows)


def husimi_closed(params: IntermediateParams, beta: complex) -> float:
    """Q(beta) = (1/pi) e^{-|b|^2} |lambda + b|^{2M} / (M! L_M(-lambda^2))."""
    beta = complex(beta)
    m = params.m
    if m == 0:
        return math.exp(-abs(beta) ** 2) / _PI
    shifted = abs(params.lam + beta)
    if shifted == 0.0:
        return 0.0
    log_q = (
        -abs(beta) ** 2
        + 2.0 * m * math.log(shifted)
        - sf.log_factorial(m)
        - sf.log_laguerre_negarg(m, params.lambda_sq).log_magnitude
    )
    return math.exp(log_q) / _PI


def _coherent_conj_amplitudes(beta: complex, count: int) -> np.ndarray:
    """e^{-|b|^2/2} (b*)^n / sqrt(n!) for n = 0 .. count-1."""
    amps = np.empty(count, dtype=complex)
    amps[0] = math.exp(-0.5 * abs(beta) ** 2)
    if count > 1:
        steps = np.conj(beta) / np.sqrt(np.arange(1, count, dtype=float))
        amps[1:] = amps[0] * np.cumprod(steps)
    return amps


def husimi_direct(state: FockVector, beta: complex) -> float:
    """Q(beta) from the amplitude overlap with the coherent state."""
    c = np.asarray(state, dtype=complex)
    overlap = np.dot(_coherent_conj_amplitudes(complex(beta), c.size), c)
    return float(abs(overlap) ** 2) / _PI


def wigner_closed(params: IntermediateParams, beta: complex) -> float:
    """W(beta) = (2/pi) (-1)^M L_M(|2b + lambda|^2) e^{-2|b|^2} / L_M(-lambda^2)."""
    beta = complex(beta)
    m = params.m
    arg = abs(2.0 * beta + params.lam) ** 2
    numer = sf.laguerre_logvalue(m, arg)
    if numer.sign == 0:
        return 0.0
    log_w = (
        numer.log_magnitude
        - 2.0 * abs(beta) ** 2
        - sf.log_laguerre_negarg(m, params.lambda_sq).log_magnitude
    )
    parity = -1 if m % 2 else 1
    return 2.0 / _PI * parity * numer.sign * math.exp(log_w)


def wigner_oracle(state: FockVector, beta: complex, dim: int | None = None) -> float:
    """Parity-weighted displaced-number-state sum (2/pi) sum_k (-1)^k |<beta,k|psi>|^2.

    The sum over k stops once the remaining probability mass (an upper bound
    on the remainder) falls below 1e-12.
    """
    c = np.asarray(state, dtype=complex)
    beta = complex(beta)
    support = int(np.nonzero(np.abs(c) > 0)[0][-1]) if np.any(c) else 0
    if dim is None:
        dim = default_dim(support, beta)
    if dim < c.size:
        raise ValidationError(f"dim={dim} smaller than the state ({c.size})")
    padded = np.zeros(dim, dtype=complex)
    padded[: c.size] = c
    displaced = displacement_matrix(-beta, dim) @ padded
    weights = np.abs(displaced) ** 2
    # the truncated displacement is exactly unitary, so an undersized space
    # shows up as probability mass pressed against the truncation edge
    edge = float(np.sum(weights[max(dim - 4, 0):]))
    if edge >= 1e-12:
        raise TruncationError(
            f"displaced state does not fit dim={dim}: edge mass {edge:.3e}"
        )
    remaining = float(np.sum(weights))
    total = 0.0
    for k in range(dim):
        total += (weights[k] if k % 2 == 0 else -weights[k])
        remaining -= weights[k]
        if remaining < 1e-12:
            break
    return 2.0 / _PI * total


def rasterize(field_fn, grid: PhaseGrid) -> ScalarField:
    """Evaluate a scalar function of beta over a grid, row-major, deterministically."""
    xs, ys = grid.xs(), grid.ys()
    values = np.empty((grid.nx, grid.ny), dtype=float)
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            try:
                values[i, j] = field_fn(complex(x, y))
            except NumcohError as exc:
                raise type(exc)(f"{exc} [at grid point x={x:.6g}, y={y:.6g}]") from exc
    return ScalarField(grid=grid, values=values)


def integrate(field: ScalarField) -> float:
    """Rectangle-rule integral of the field, treating points as cell centers."""
    dx = (field.grid.x_max - field.grid.x_min) / max(field.grid.nx - 1, 1)
    dy = (field.grid.y_max - field.grid.y_min) / max(field.grid.ny - 1, 1)
    return float(np.sum(field.values)) * dx * dy


def midpoint_grid(x_min, x_max, y_min, y_max, nx, ny) -> PhaseGrid:
    """Grid whose points sit at the centers of an nx-by-ny cell subdivision."""
    dx = (x_max - x_min) / nx
    dy = (y_max - y_min) / ny
    return PhaseGrid(
        x_min=x_min + 0.5 * dx,
        x_max=x_max - 0.5 * dx,
        y_min=y_min + 0.5 * dy,
        y_max=y_max - 0.5 * dy,
        nx=nx,
        ny=ny,
    )


def _half_max_crossing_width(axis: np.ndarray, profile: np.ndarray, level: float) -> float:
    """Width between the outermost linear-interpolated crossings of `level`."""
    above = profile >= level
    if not np.any(above):
        return 0.0
    first = int(np.argmax(above))
    last = int(len(above) - 1 - np.argmax(above[::-1]))
    left = axis[first]
    if first > 0:
        frac = (level - profile[first - 1]) / (profile[first] - profile[first - 1])
        left = axis[first - 1] + frac * (axis[first] - axis[first - 1])
    right = axis[last]
    if last < len(axis) - 1:
        frac = (profile[last] - level) / (profile[last] - profile[last + 1])
        right = axis[last] + frac * (axis[last + 1] - axis[last])
    return float(right - left)


def half_max_widths(field: ScalarField) -> tuple[float, float]:
    """Full widths of the 50%-of-max contour along x and y through the peak."""
    i_peak, j_peak = np.unravel_index(np.argmax(field.values), field.values.shape)
    level = 0.5 * float(field.values[i_peak, j_peak])
    width_x = _half_max_crossing_width(field.grid.xs(), field.values[:, j_peak], level)
    width_y = _half_max_crossing_width(field.grid.ys(), field.values[i_peak, :], level)
    return width_x, width_y
