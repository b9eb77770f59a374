"""Bracketed root finding and bounded scalar maximization."""

import logging
from collections.abc import Callable

import numpy as np
from scipy import optimize

logger = logging.getLogger(__name__)

# scipy's bisect refuses rtol below 4 * machine epsilon.
MIN_RTOL = 4.0 * float(np.finfo(float).eps)
_MAX_BISECTIONS = 2000


class BracketError(ValueError):
    """Raised when f(lo) and f(hi) have the same sign and neither is a root."""


def bisect_monotone(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    *,
    rtol: float = MIN_RTOL,
) -> float:
    """Root of a monotone function on [lo, hi] by bisection.

    Returns an x whose final bracket has width at most ``tol + rtol * |x|``.
    Endpoint roots are returned as-is. Deterministic for a given input.

    Raises:
        ValueError: If ``tol`` is not positive or ``lo > hi``.
        BracketError: If f(lo) and f(hi) share a sign.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if lo > hi:
        raise ValueError(f"Empty bracket: lo={lo} > hi={hi}")
    f_lo = f(lo)
    if f_lo == 0.0:
        return lo
    f_hi = f(hi)
    if f_hi == 0.0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise BracketError(
            f"No sign change on [{lo}, {hi}]: f(lo)={f_lo}, f(hi)={f_hi}"
        )
    return float(
        optimize.bisect(
            f, lo, hi, xtol=tol, rtol=max(rtol, MIN_RTOL), maxiter=_MAX_BISECTIONS
        )
    )


def golden_section_maximize(
    f: Callable[[float], float], lo: float, hi: float, tol: float
) -> tuple[float, float]:
    """Maximize a unimodal function on [lo, hi].

    Uses scipy's bounded minimizer (golden-section steps with parabolic
    interpolation), then compares the result against both endpoints, since
    the bounded search never evaluates them.

    Returns:
        (x*, f(x*)).
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if lo > hi:
        raise ValueError(f"Empty interval: lo={lo} > hi={hi}")
    if lo == hi:
        return lo, f(lo)
    result = optimize.minimize_scalar(
        lambda x: -f(x), bounds=(lo, hi), method="bounded", options={"xatol": tol}
    )
    interior = (float(result.x), float(-result.fun))
    logger.debug("bounded search on [%s, %s] -> %s", lo, hi, interior)
    return max([interior, (lo, f(lo)), (hi, f(hi))], key=lambda c: c[1])
