"""Normal and chi distribution functions on top of ``scipy.special``.

``ndtr`` evaluates the normal CDF through the complementary error function,
so both tails keep full relative accuracy. ``ndtri`` gives the starting point
for the quantile, which is then polished with Newton steps against ``ndtr``.
"""

import math

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import special

SQRT_2PI = math.sqrt(2.0 * math.pi)
LN2 = math.log(2.0)
LOG2E = 1.0 / LN2

_NEWTON_STEPS = 2


class DomainError(ValueError):
    """Raised when an argument lies outside a function's domain."""


def std_normal_cdf(x: float) -> float:
    """Phi(x) for the standard normal distribution.

    Infinite arguments saturate to 0 or 1; NaN is rejected.
    """
    if math.isnan(x):
        raise DomainError("std_normal_cdf is undefined for NaN")
    return float(special.ndtr(x))


def std_normal_pdf(x: float) -> float:
    return math.exp(-0.5 * x * x) / SQRT_2PI


def std_normal_quantile(p: float) -> float:
    """Inverse of ``std_normal_cdf`` on the open interval (0, 1)."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"std_normal_quantile requires 0 < p < 1, got {p}")
    x = float(special.ndtri(p))
    residual = float(special.ndtr(x)) - p
    for _ in range(_NEWTON_STEPS):
        density = std_normal_pdf(x)
        if density == 0.0 or residual == 0.0:
            break
        candidate = x - residual / density
        candidate_residual = float(special.ndtr(candidate)) - p
        # Near p = 1 the residual is a difference of two numbers close to 1;
        # only accept steps that actually reduce it.
        if abs(candidate_residual) >= abs(residual):
            break
        x, residual = candidate, candidate_residual
    return x


def normal_interval_probability(
    lower: ArrayLike, upper: ArrayLike
) -> NDArray[np.float64]:
    """Phi(upper) - Phi(lower), elementwise, accurate in both tails.

    Intervals lying in the upper tail are evaluated through the reflected
    lower tail, Phi(-lower) - Phi(-upper).
    """
    lo = np.asarray(lower, dtype=float)
    hi = np.asarray(upper, dtype=float)
    direct = special.ndtr(hi) - special.ndtr(lo)
    reflected = special.ndtr(-lo) - special.ndtr(-hi)
    return np.where(lo > 0.0, reflected, direct)


def chi_cdf(x: float, n: int) -> float:
    """P(||V|| <= x) for V standard normal in n dimensions.

    Equal to the regularized lower incomplete gamma P(n/2, x^2/2).
    """
    if n < 1:
        raise DomainError(f"chi_cdf requires n >= 1, got {n}")
    if math.isnan(x) or x < 0.0:
        raise DomainError(f"chi_cdf requires x >= 0, got {x}")
    if math.isinf(x):
        return 1.0
    return float(special.gammainc(n / 2.0, x * x / 2.0))


def chi_sf(x: float, n: int) -> float:
    """P(||V|| > x), the complement of ``chi_cdf`` without cancellation."""
    if n < 1:
        raise DomainError(f"chi_sf requires n >= 1, got {n}")
    if math.isnan(x) or x < 0.0:
        raise DomainError(f"chi_sf requires x >= 0, got {x}")
    if math.isinf(x):
        return 0.0
    return float(special.gammaincc(n / 2.0, x * x / 2.0))
