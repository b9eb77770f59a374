"""Differential entropy of one-dimensional Gaussian mixtures.

Every mixture here shares one set of component means and one variance; only
the weights vary. ``mixture_entropies`` integrates all weight rows at once,
which is how the relay verifier evaluates h(Y | I = k) for every quantizer
cell in a single adaptive pass.
"""

import logging
import math
from collections.abc import Callable, Sequence
from typing import Literal, Self

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import integrate, special

from .special import LN2, DomainError

logger = logging.getLogger(__name__)

QuadratureMethod = Literal["adaptive", "gauss-hermite"]

# Tail mass beyond 10 standard deviations is below 1e-22.
DEFAULT_TAIL_SIGMAS = 10.0
WEIGHT_SUM_TOLERANCE = 1e-12


class QuadratureError(ArithmeticError):
    """Raised when an integral does not reach the requested tolerance."""


class QuadratureSpec(BaseModel):
    """How to integrate a mixture entropy.

    ``adaptive`` uses Gauss-Kronrod subdivision with breakpoints at the
    component means, stopping at ``tolerance`` bits (absolute) or failing after
    ``max_subdivisions`` intervals. ``gauss-hermite`` uses ``nodes`` fixed
    nodes per component and ignores the tolerance.

    The support is ``[min mean - tail_sigmas * sd, max mean + tail_sigmas * sd]``
    unless ``support`` pins it explicitly.
    """

    model_config = ConfigDict(frozen=True)

    method: QuadratureMethod = "adaptive"
    tolerance: float = Field(default=1e-9, gt=0)
    max_subdivisions: int = Field(default=2000, ge=2)
    nodes: int = Field(default=64, ge=2)
    tail_sigmas: float = Field(default=DEFAULT_TAIL_SIGMAS, gt=0)
    support: tuple[float, float] | None = None

    @model_validator(mode="after")
    def _check_support(self) -> Self:
        if self.support is not None:
            lo, hi = self.support
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise ValueError(f"support must be a finite interval, got {self.support}")
        return self

    def bounds(self, means: NDArray[np.float64], variance: float) -> tuple[float, float]:
        if self.support is not None:
            return self.support
        spread = self.tail_sigmas * math.sqrt(variance)
        return float(means.min()) - spread, float(means.max()) + spread

    def refined(self) -> "QuadratureSpec":
        """Same spec with half the tolerance and twice the nodes."""
        return self.model_copy(
            update={"tolerance": self.tolerance / 2, "nodes": self.nodes * 2}
        )


DEFAULT_QUADRATURE = QuadratureSpec()


def gaussian_entropy(variance: float) -> float:
    """h(N(0, variance)) in bits."""
    if not variance > 0.0:
        raise DomainError(f"variance must be positive, got {variance}")
    return 0.5 * math.log2(2.0 * math.pi * math.e * variance)


def discrete_entropy(p: ArrayLike) -> float:
    """H(p) in bits, with 0 log 0 = 0."""
    return float(np.sum(special.entr(np.asarray(p, dtype=float)))) / LN2


def _validate(
    weight_rows: ArrayLike, means: ArrayLike, variance: float
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    rows = np.atleast_2d(np.asarray(weight_rows, dtype=float))
    mu = np.asarray(means, dtype=float)
    if not variance > 0.0:
        raise DomainError(f"variance must be positive, got {variance}")
    if mu.ndim != 1 or mu.size == 0 or not np.all(np.isfinite(mu)):
        raise DomainError("means must be a non-empty vector of finite values")
    if rows.shape[1] != mu.size:
        raise DomainError(
            f"weights have {rows.shape[1]} columns but there are {mu.size} means"
        )
    if np.any(rows < 0.0):
        raise DomainError("weights must be nonnegative")
    sums = rows.sum(axis=1)
    if np.any(np.abs(sums - 1.0) > WEIGHT_SUM_TOLERANCE):
        raise DomainError(f"weights must sum to 1, got row sums {sums.tolist()}")
    return rows, mu


def _log_densities(
    y: NDArray[np.float64],
    log_weights: NDArray[np.float64],
    means: NDArray[np.float64],
    variance: float,
) -> NDArray[np.float64]:
    """log p_k(y) for every row k; shape ``y.shape + (K,)``."""
    log_components = -0.5 * (y[..., None] - means) ** 2 / variance - 0.5 * math.log(
        2.0 * math.pi * variance
    )
    return special.logsumexp(log_components[..., None, :] + log_weights, axis=-1)


def _log_weights(rows: NDArray[np.float64]) -> NDArray[np.float64]:
    with np.errstate(divide="ignore"):
        return np.log(rows)


def _integrate(
    integrand: Callable[[float], NDArray[np.float64] | float],
    means: NDArray[np.float64],
    variance: float,
    quad: QuadratureSpec,
    what: str,
) -> NDArray[np.float64]:
    lo, hi = quad.bounds(means, variance)
    breakpoints = sorted({float(m) for m in means if lo < m < hi})
    values, error, info = integrate.quad_vec(
        integrand,
        lo,
        hi,
        epsabs=quad.tolerance,
        epsrel=0.0,
        norm="max",
        limit=quad.max_subdivisions,
        points=breakpoints or None,
        full_output=True,
    )
    logger.debug(
        "quad_vec on [%.3f, %.3f]: %d intervals, error %.3e, status %s",
        lo,
        hi,
        info.intervals.shape[0],
        error,
        info.status,
    )
    if info.status != 0 or error > quad.tolerance:
        raise QuadratureError(
            f"{what} did not reach tolerance {quad.tolerance:.1e} bits "
            f"(estimated error {error:.3e}, status {info.status})"
        )
    return np.atleast_1d(np.asarray(values, dtype=float))


def _adaptive(
    rows: NDArray[np.float64],
    means: NDArray[np.float64],
    variance: float,
    quad: QuadratureSpec,
) -> NDArray[np.float64]:
    log_weights = _log_weights(rows)

    def integrand(y: float) -> NDArray[np.float64]:
        log_p = _log_densities(np.asarray(y, dtype=float), log_weights, means, variance)
        return special.entr(np.exp(log_p)) / LN2

    return _integrate(integrand, means, variance, quad, "Mixture entropy")


def _gauss_hermite(
    rows: NDArray[np.float64],
    means: NDArray[np.float64],
    variance: float,
    quad: QuadratureSpec,
) -> NDArray[np.float64]:
    # E[g(Y)] for Y ~ N(mu, var) is sum_i w_i g(mu + sqrt(2 var) x_i) / sqrt(pi).
    x, w = np.polynomial.hermite.hermgauss(quad.nodes)
    w = w / math.sqrt(math.pi)
    y = means[:, None] + math.sqrt(2.0 * variance) * x[None, :]  # (M, nodes)
    log_p = _log_densities(y, _log_weights(rows), means, variance)  # (M, nodes, K)
    expected_log_p = np.einsum("mik,i->km", log_p, w)  # (K, M)
    # Rows never sample components they give zero weight.
    return -np.sum(np.where(rows > 0.0, rows * expected_log_p, 0.0), axis=1) / LN2


def mixture_entropies(
    weight_rows: ArrayLike,
    means: ArrayLike,
    variance: float,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> NDArray[np.float64]:
    """Differential entropies (bits) of several mixtures sharing means and variance.

    Args:
        weight_rows: (K, M) array; each row is a probability vector over the means.
        means: M component means.
        variance: Common component variance.
        quad: Integration settings.

    Raises:
        DomainError: On non-normalized weights or nonpositive variance.
        QuadratureError: If the adaptive rule cannot reach the tolerance.
    """
    rows, mu = _validate(weight_rows, means, variance)
    if quad.method == "adaptive":
        return _adaptive(rows, mu, variance, quad)
    return _gauss_hermite(rows, mu, variance, quad)


def entropy_of_gaussian_mixture(
    weights: Sequence[float] | NDArray[np.float64],
    means: Sequence[float] | NDArray[np.float64],
    variance: float,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Differential entropy (bits) of sum_m w_m N(mean_m, variance)."""
    return float(mixture_entropies([weights], means, variance, quad)[0])


def _posterior_terms(
    y: NDArray[np.float64],
    log_prior: NDArray[np.float64],
    means: NDArray[np.float64],
    variance: float,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Output density f(y) and posterior entropy H(X | Y = y) in bits."""
    log_joint = (
        log_prior
        - 0.5 * (y[..., None] - means) ** 2 / variance
        - 0.5 * math.log(2.0 * math.pi * variance)
    )
    log_f = special.logsumexp(log_joint, axis=-1, keepdims=True)
    posterior = np.exp(log_joint - log_f)
    return np.exp(log_f[..., 0]), np.sum(special.entr(posterior), axis=-1) / LN2


def equivocation(
    weights: Sequence[float] | NDArray[np.float64],
    means: Sequence[float] | NDArray[np.float64],
    variance: float,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """H(X | X + W) in bits, X ~ ``weights`` over ``means`` and W ~ N(0, variance).

    The posterior entropy of X is averaged against the output density. This
    shares no integrand with ``mixture_entropies``, so H(X) - equivocation and
    h(X + W) - h(W) are separate evaluations of the same mutual information.

    Raises:
        DomainError: On non-normalized weights or nonpositive variance.
        QuadratureError: If the adaptive rule cannot reach the tolerance.
    """
    rows, mu = _validate([weights], means, variance)
    log_prior = _log_weights(rows)[0]
    if quad.method == "adaptive":

        def integrand(y: float) -> float:
            density, entropy = _posterior_terms(np.asarray(y, dtype=float), log_prior, mu, variance)
            return float(density * entropy)

        return float(_integrate(integrand, mu, variance, quad, "Equivocation")[0])
    x, w = np.polynomial.hermite.hermgauss(quad.nodes)
    y = mu[:, None] + math.sqrt(2.0 * variance) * x[None, :]  # (M, nodes)
    _, entropy = _posterior_terms(y, log_prior, mu, variance)
    per_component = entropy @ (w / math.sqrt(math.pi))
    return float(np.sum(np.where(rows[0] > 0.0, rows[0] * per_component, 0.0)))
