"""Factorials and (associated) Laguerre polynomials, with log-domain variants.

The normalization constants of the interpolating states involve
``M! * L_M(-lambda^2)``, which overflows double precision long before the
orders this package needs (M ~ 200).  At negative arguments every series
term of ``L_m^{(k)}`` is nonnegative, so those sums are evaluated with
log-sum-exp and are cancellation-free.  Nonnegative arguments use the
three-term recurrence, which is the stable choice there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import ValidationError

#: Largest supported polynomial order.  Figure workloads need M <= 200;
#: anything past this cap is rejected rather than silently degraded.
MAX_ORDER = 2000

_RESCALE_THRESHOLD = 1e250


@dataclass(frozen=True)
class LogValue:
    """A real number stored as the natural log of its magnitude plus a sign.

    ``sign == 0`` encodes an exact zero; ``log_magnitude`` carries no
    information in that case and arithmetic never reads it.
    """

    log_magnitude: float
    sign: int

    @staticmethod
    def from_float(value: float) -> "LogValue":
        if value == 0.0:
            return LogValue(0.0, 0)
        return LogValue(math.log(abs(value)), 1 if value > 0 else -1)

    def to_float(self) -> float:
        """Convert back to a float; overflows to ``inf`` honestly."""
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.log_magnitude)
        except OverflowError:
            return self.sign * math.inf

    def __mul__(self, other: "LogValue") -> "LogValue":
        if self.sign == 0 or other.sign == 0:
            return LogValue(0.0, 0)
        return LogValue(self.log_magnitude + other.log_magnitude, self.sign * other.sign)

    def __truediv__(self, other: "LogValue") -> "LogValue":
        if other.sign == 0:
            raise ZeroDivisionError("division by an exactly-zero LogValue")
        if self.sign == 0:
            return LogValue(0.0, 0)
        return LogValue(self.log_magnitude - other.log_magnitude, self.sign * other.sign)


def _check_order(m: int, name: str = "order") -> int:
    m = int(m)
    if m < 0:
        raise ValidationError(f"{name} must be >= 0, got {m}")
    if m > MAX_ORDER:
        raise ValidationError(f"{name} {m} exceeds the supported cap {MAX_ORDER}")
    return m


def log_factorial(n: int) -> float:
    """ln(n!) for n >= 0."""
    n = int(n)
    if n < 0:
        raise ValidationError(f"factorial argument must be >= 0, got {n}")
    return math.lgamma(n + 1)


def _logsumexp(log_terms: np.ndarray) -> float:
    peak = float(np.max(log_terms))
    return peak + math.log(float(np.sum(np.exp(log_terms - peak))))


def log_laguerre_negarg(m: int, lambda_sq: float) -> LogValue:
    """LogValue of L_m(-lambda_sq) for lambda_sq >= 0.

    All series terms are nonnegative, so the sign is always +1 and the
    log-sum-exp accumulation cannot lose digits to cancellation.
    """
    m = _check_order(m)
    lambda_sq = float(lambda_sq)
    if lambda_sq < 0:
        raise ValidationError(f"lambda_sq must be >= 0, got {lambda_sq}")
    if lambda_sq == 0.0 or m == 0:
        return LogValue(0.0, 1)  # only the n=0 term, which is 1
    n = np.arange(m + 1)
    log_terms = n * math.log(lambda_sq) + math.lgamma(m + 1) - gammaln(m - n + 1) - 2.0 * gammaln(n + 1)
    return LogValue(_logsumexp(log_terms), 1)


def log_assoc_laguerre_negarg(m: int, k: int, lambda_sq: float) -> LogValue:
    """LogValue of L_m^{(k)}(-lambda_sq) for integer k >= 0, lambda_sq >= 0."""
    m = _check_order(m)
    k = int(k)
    if k < 0:
        raise ValidationError(f"superscript k must be an integer >= 0, got {k}")
    lambda_sq = float(lambda_sq)
    if lambda_sq < 0:
        raise ValidationError(f"lambda_sq must be >= 0, got {lambda_sq}")
    if lambda_sq == 0.0 or m == 0:
        # n=0 term alone: (m+k)! / (m! k!)
        log0 = math.lgamma(m + k + 1) - math.lgamma(m + 1) - math.lgamma(k + 1)
        return LogValue(log0, 1)
    n = np.arange(m + 1)
    log_terms = (
        n * math.log(lambda_sq)
        + math.lgamma(m + k + 1)
        - gammaln(m - n + 1)
        - gammaln(n + 1)
        - gammaln(k + n + 1)
    )
    return LogValue(_logsumexp(log_terms), 1)


def _recurrence_logvalue(m: int, x: float, l0: float, l1: float, k: int = 0) -> LogValue:
    """Upward three-term recurrence with periodic rescaling against overflow.

    (n+1) L_{n+1}^{(k)} = (2n+k+1-x) L_n^{(k)} - (n+k) L_{n-1}^{(k)}
    """
    if m == 0:
        return LogValue.from_float(l0)
    prev, curr = l0, l1
    log_scale = 0.0
    for n in range(1, m):
        prev, curr = curr, ((2 * n + k + 1 - x) * curr - (n + k) * prev) / (n + 1)
        biggest = max(abs(prev), abs(curr))
        if biggest > _RESCALE_THRESHOLD:
            prev /= _RESCALE_THRESHOLD
            curr /= _RESCALE_THRESHOLD
            log_scale += math.log(_RESCALE_THRESHOLD)
    if curr == 0.0:
        return LogValue(0.0, 0)
    return LogValue(math.log(abs(curr)) + log_scale, 1 if curr > 0 else -1)


def laguerre_logvalue(m: int, x: float) -> LogValue:
    """LogValue of L_m(x): log-domain series for x <= 0, recurrence otherwise."""
    m = _check_order(m)
    x = float(x)
    if x <= 0.0:
        return log_laguerre_negarg(m, -x)
    return _recurrence_logvalue(m, x, 1.0, 1.0 - x, k=0)


def laguerre(m: int, x: float) -> float:
    """Laguerre polynomial L_m(x).

    For x <= 0 the result is >= 1 (every series term is nonnegative and the
    n=0 term equals 1); large orders may overflow to ``inf``, in which case
    :func:`log_laguerre_negarg` is the usable representation.
    """
    return laguerre_logvalue(m, x).to_float()


def assoc_laguerre(m: int, k: int, x: float) -> float:
    """Associated Laguerre polynomial L_m^{(k)}(x) for integer k >= 0.

    ``assoc_laguerre(m, 0, x)`` coincides with :func:`laguerre`.
    """
    m = _check_order(m)
    k = int(k)
    if k < 0:
        raise ValidationError(f"superscript k must be an integer >= 0, got {k}")
    x = float(x)
    if x <= 0.0:
        return log_assoc_laguerre_negarg(m, k, -x).to_float()
    return _recurrence_logvalue(m, x, 1.0, 1.0 + k - x, k=k).to_float()
