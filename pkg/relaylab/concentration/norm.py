import logging
import math

import numpy as np

from relaylab.config import default_workers
from relaylab.models import NoiseNormReport
from relaylab.numerics import DomainError, RngStream, chi_cdf, chi_sf
from relaylab.utils.pool import ordered_map

from .blowup import MC_BLOCK_TRIALS, MC_STDERR_ALLOWANCE, MIN_MC_TRIALS, block_sizes

logger = logging.getLogger(__name__)


def noise_norm_probability(n: int, noise: float, eps: float) -> float:
    """Exact Pr(sqrt(N) - eps <= ||W|| / sqrt(n) <= sqrt(N) + eps), W ~ N(0, N I_n)."""
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if not (noise > 0.0 and eps > 0.0):
        raise DomainError(f"noise and eps must be positive, got {noise} and {eps}")
    # ||W|| / sqrt(N) is chi with n degrees of freedom.
    stretch = math.sqrt(n / noise)
    sd = math.sqrt(noise)
    lower = max(0.0, sd - eps) * stretch
    upper = (sd + eps) * stretch
    return max(0.0, 1.0 - chi_sf(upper, n) - chi_cdf(lower, n))


def _count_block(
    n: int, noise: float, eps: float, rng: RngStream, block: int, size: int
) -> int:
    gen = rng.block_generator(block)
    # ||W||^2 = N * chi^2_n, drawn directly rather than through n coordinates.
    norms = np.sqrt(noise * gen.chisquare(n, size) / n)
    sd = math.sqrt(noise)
    return int(np.count_nonzero((norms >= sd - eps) & (norms <= sd + eps)))


def noise_norm_concentration(
    n: int,
    noise: float,
    eps: float,
    trials: int,
    rng: RngStream,
    workers: int | None = None,
) -> NoiseNormReport:
    """Fraction of noise draws whose per-coordinate norm lies within eps of sqrt(N).

    Passes when the sampled fraction is within 4 standard errors of the exact
    chi probability, with one trial of slack for the granularity of counts.
    """
    exact = noise_norm_probability(n, noise, eps)
    if trials < MIN_MC_TRIALS:
        raise DomainError(f"Monte Carlo needs at least {MIN_MC_TRIALS} trials, got {trials}")
    workers = default_workers() if workers is None else workers
    sizes = block_sizes(trials)
    hits = sum(
        ordered_map(
            lambda job: _count_block(n, noise, eps, rng, job[0], job[1]),
            list(enumerate(sizes)),
            workers,
        )
    )
    probability = hits / trials
    std_error = math.sqrt(probability * (1.0 - probability) / trials)
    allowance = MC_STDERR_ALLOWANCE * math.sqrt(exact * (1.0 - exact) / trials) + 1.0 / trials
    passed = abs(probability - exact) <= allowance
    if not passed:
        logger.warning(
            "noise norm at n=%d: sampled %.6f vs exact %.6f (%d blocks of %d)",
            n,
            probability,
            exact,
            len(sizes),
            MC_BLOCK_TRIALS,
        )
    return NoiseNormReport(
        dimension=n,
        noise=noise,
        eps=eps,
        trials=trials,
        probability=probability,
        std_error=std_error,
        exact=exact,
        passed=passed,
    )
