"""Reference computations that share no code with ``relaylab.numerics``.

They are slow and only as accurate as plain series and dense Riemann sums
allow, which is the point: goldens computed here can catch a regression in
the scipy-backed implementation.
"""

import math
from collections.abc import Sequence

import numpy as np

_SQRT_2PI = math.sqrt(2.0 * math.pi)
_LN2 = math.log(2.0)
# Grid step and half-width (in standard deviations) of every Riemann sum.
RIEMANN_STEP = 1e-4
RIEMANN_SIGMAS = 12.0
_SERIES_LIMIT = 5.0


def normal_cdf(x: float) -> float:
    """Phi(x): power series near 0, Laplace continued fraction in the tails."""
    if abs(x) <= _SERIES_LIMIT:
        terms = [x]
        while abs(terms[-1]) > 1e-300:
            k = len(terms)
            terms.append(terms[-1] * x * x / (2 * k + 1))
            if abs(terms[-1]) < 1e-20 * abs(math.fsum(terms)):
                break
        return 0.5 + math.exp(-0.5 * x * x) / _SQRT_2PI * math.fsum(terms)
    z = abs(x)
    # Q(z) = phi(z) / (z + 1/(z + 2/(z + 3/(z + ...)))), evaluated bottom-up.
    fraction = z
    for k in range(200, 0, -1):
        fraction = z + k / fraction
    tail = math.exp(-0.5 * z * z) / _SQRT_2PI / fraction
    return tail if x < 0 else 1.0 - tail


def normal_quantile(p: float) -> float:
    lo, hi = -40.0, 40.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if normal_cdf(mid) < p:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def chi_cdf(x: float, n: int) -> float:
    """P(n/2, x^2/2) by its power series, summed with ``math.fsum``."""
    if x == 0.0:
        return 0.0
    s, z = n / 2.0, x * x / 2.0
    term = math.exp(s * math.log(z) - z - math.lgamma(s + 1.0))
    terms = []
    k = 0
    while term > 1e-20 * max(math.fsum(terms), 1e-300) or k < 5:
        terms.append(term)
        term *= z / (s + k + 1.0)
        k += 1
    return math.fsum(terms)


def a_star(r0: float) -> float:
    """Root of 2a + sqrt(2a / ln 2) = r0 from the quadratic in sqrt(a)."""
    b = math.sqrt(2.0 / _LN2)
    u = (-b + math.sqrt(b * b + 8.0 * r0)) / 4.0
    return u * u


def capacity_excess(snr: float) -> float:
    """1/2 log2(1 + 2 snr) - 1/2 log2(1 + snr)."""
    return 0.5 * math.log2((1.0 + 2.0 * snr) / (1.0 + snr))


def gap(snr: float, r0: float) -> float:
    """a* while r0 <= excess, then excess - r0 + a*, then 0."""
    excess = capacity_excess(snr)
    a = a_star(r0)
    if r0 <= excess:
        return a
    return max(0.0, excess - r0 + a)


def _grid(means: Sequence[float], variance: float) -> np.ndarray:
    sd = math.sqrt(variance)
    lo = min(means) - RIEMANN_SIGMAS * sd
    hi = max(means) + RIEMANN_SIGMAS * sd
    count = int(round((hi - lo) / RIEMANN_STEP))
    return lo + RIEMANN_STEP * np.arange(count + 1)


def _mixture_density(
    y: np.ndarray, weights: Sequence[float], means: Sequence[float], variance: float
) -> np.ndarray:
    density = np.zeros_like(y)
    for w, m in zip(weights, means):
        density += w * np.exp(-((y - m) ** 2) / (2.0 * variance))
    return density / math.sqrt(2.0 * math.pi * variance)


def _riemann_entropy(density: np.ndarray) -> float:
    positive = density[density > 0.0]
    return float(-np.sum(positive * np.log2(positive)) * RIEMANN_STEP)


def mixture_entropy(weights: Sequence[float], means: Sequence[float], variance: float) -> float:
    y = _grid(means, variance)
    return _riemann_entropy(_mixture_density(y, weights, means, variance))


def _plogp(p: float) -> float:
    return -p * math.log2(p) if p > 0.0 else 0.0


def toy_code_quantities(
    codebook: Sequence[float], thresholds: Sequence[float], noise: float
) -> dict[str, float]:
    """a, b, c, h(Y|I) and the slack of a toy code with distinct codewords."""
    m_count = len(codebook)
    sd = math.sqrt(noise)
    edges = [-math.inf, *thresholds, math.inf]

    def cdf(t: float, x: float) -> float:
        if t == -math.inf:
            return 0.0
        if t == math.inf:
            return 1.0
        return normal_cdf((t - x) / sd)

    cells = [
        [cdf(edges[k + 1], x) - cdf(edges[k], x) for k in range(len(edges) - 1)]
        for x in codebook
    ]
    p_cell = [math.fsum(row[k] for row in cells) / m_count for k in range(len(edges) - 1)]
    a = math.fsum(_plogp(p) for row in cells for p in row) / m_count
    h_x = math.log2(m_count)
    b = h_x + a - math.fsum(_plogp(p) for p in p_cell)

    y = _grid(codebook, noise)
    h_y = _riemann_entropy(_mixture_density(y, [1.0 / m_count] * m_count, codebook, noise))
    h_y_given_i = 0.0
    for k, pk in enumerate(p_cell):
        if pk <= 0.0:
            continue
        weights = [cells[m][k] / m_count / pk for m in range(m_count)]
        h_y_given_i += pk * _riemann_entropy(_mixture_density(y, weights, codebook, noise))

    h_noise = 0.5 * math.log2(2.0 * math.pi * math.e * noise)
    c = h_x - (h_y - h_noise)
    rhs = b - c + h_noise + a + math.sqrt(2.0 * a / _LN2)
    return {"a": a, "b": b, "c": c, "h_y_given_i": h_y_given_i, "slack": rhs - h_y_given_i}


def halfspace_blowup(n: int, a: float, r: float, noise: float) -> float:
    """Enlarged measure of the half-space of measure 2^(-n a)."""
    if a == 0.0:
        return 1.0
    c = math.sqrt(noise) * normal_quantile(2.0 ** (-n * a))
    rho = math.sqrt(n) * (math.sqrt(2.0 * noise * a * _LN2) + r)
    return normal_cdf((c + rho) / math.sqrt(noise))
