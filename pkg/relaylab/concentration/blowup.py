"""Blow-up of Gaussian sets: exact, semi-analytic and Monte Carlo measurements.

For a set A in R^n with Pr(U in A) >= 2^(-n a) under U ~ N(0, N I_n), the
enlargement of A by rho = sqrt(n) (sqrt(2 N a ln 2) + r) has measure at
least 1 - 2^(-n r^2 / (2N)). Each experiment here builds or takes a set,
checks its measure floor, and compares the measured enlargement with that
bound.
"""

import logging
import math

import numpy as np

from relaylab.config import default_workers
from relaylab.models import (
    Ball,
    ConcentrationReport,
    HalfSpace,
    ScalingReport,
    SetDescriptor,
)
from relaylab.models.concentration import MeasurementMethod
from relaylab.numerics import (
    LN2,
    DomainError,
    RngStream,
    bisect_monotone,
    chi_cdf,
    std_normal_quantile,
)
from relaylab.numerics.roots import MIN_RTOL
from relaylab.utils.pool import ordered_map

from .sets import distance_to_set, exact_enlarged_measure, has_exact_enlargement, set_measure

logger = logging.getLogger(__name__)

MC_BLOCK_TRIALS = 10_000
MIN_MC_TRIALS = 10_000
MC_STDERR_ALLOWANCE = 4.0
SCALING_EXACT_ALLOWANCE = 1e-10
# Relative slack on the measure floor, for sets constructed to sit exactly on it.
FLOOR_RELATIVE_SLACK = 1e-12
_BALL_RADIUS_TOL = 1e-15
_MAX_BRACKET_DOUBLINGS = 64


class MeasureFloorError(ValueError):
    """The set's measure is below the floor 2^(-n a) the blow-up bound assumes."""


def _check_inputs(n: int, a: float, r: float, noise: float) -> None:
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    for name, value in (("a", a), ("r", r)):
        if not (math.isfinite(value) and value >= 0.0):
            raise DomainError(f"{name} must be finite and nonnegative, got {value}")
    if not (math.isfinite(noise) and noise > 0.0):
        raise DomainError(f"noise variance must be positive, got {noise}")


def blowup_radius(n: int, a: float, r: float, noise: float) -> float:
    """sqrt(n) (sqrt(2 N a ln 2) + r)."""
    _check_inputs(n, a, r, noise)
    return math.sqrt(n) * (math.sqrt(2.0 * noise * a * LN2) + r)


def theoretical_bound(n: int, r: float, noise: float) -> float:
    """1 - 2^(-n r^2 / (2N)), clamped to [0, 1]."""
    _check_inputs(n, 0.0, r, noise)
    value = -math.expm1(-n * r * r * LN2 / (2.0 * noise))
    return min(1.0, max(0.0, value))


def standard_concentration_bound(t: float, base_measure: float) -> float:
    """Lower bound on the measure of a t-enlargement of a standard normal set.

    For t >= sqrt(-2 ln p) with p the set's measure, the enlargement has
    measure at least 1 - exp(-(t - sqrt(-2 ln p))^2 / 2); below that the bound
    is vacuous.
    """
    if not 0.0 <= base_measure <= 1.0:
        raise DomainError(f"base_measure must be a probability, got {base_measure}")
    if not t >= 0.0:
        raise DomainError(f"t must be nonnegative, got {t}")
    if base_measure == 0.0:
        return 0.0
    threshold = math.sqrt(-2.0 * math.log(base_measure))
    if t <= threshold:
        return 0.0
    return -math.expm1(-0.5 * (t - threshold) ** 2)


def measure_floor(n: int, a: float) -> float:
    """2^(-n a); refuses values that underflow to zero."""
    floor = 2.0 ** (-n * a)
    if floor == 0.0:
        raise DomainError(f"2^(-n a) underflows for n={n}, a={a}")
    return floor


def _check_floor(base: float, floor: float, descriptor: SetDescriptor, a: float) -> None:
    if base < floor * (1.0 - FLOOR_RELATIVE_SLACK):
        raise MeasureFloorError(
            f"{descriptor.shape} has measure {base:.6e} below the floor "
            f"2^(-n a) = {floor:.6e} (n={descriptor.dimension}, a={a})"
        )


def _verdict(report: ConcentrationReport) -> ConcentrationReport:
    if not report.passed:
        logger.warning(
            "blow-up bound violated for %s: measured %.6e < bound %.6e",
            report.descriptor.shape,
            report.measured,
            report.theoretical_bound,
        )
    return report


def exact_blowup(
    descriptor: SetDescriptor,
    a: float,
    r: float,
    method: MeasurementMethod = "exact",
) -> ConcentrationReport:
    """Blow-up measured through the closed-form enlargement of ``descriptor``.

    Raises:
        MeasureFloorError: If the set's measure is below 2^(-n a).
        DomainError: If the shape has no closed-form enlargement.
    """
    n, noise = descriptor.dimension, descriptor.noise
    rho = blowup_radius(n, a, r, noise)
    base = set_measure(descriptor)
    _check_floor(base, measure_floor(n, a), descriptor, a)
    measured = exact_enlarged_measure(descriptor, rho)
    bound = theoretical_bound(n, r, noise)
    return _verdict(
        ConcentrationReport(
            descriptor=descriptor,
            a=a,
            r=r,
            radius=rho,
            base_measure=base,
            theoretical_bound=bound,
            adaptive_bound=standard_concentration_bound(rho / descriptor.scale, base),
            measured=measured,
            method=method,
            passed=measured >= bound,
        )
    )


def halfspace_blowup_exact(n: int, a: float, r: float, noise: float = 1.0) -> ConcentrationReport:
    """Blow-up of the half-space {w : w_1 <= c} whose measure is exactly 2^(-n a).

    a = 0 gives the whole space (c = +inf) and a measured value of 1.
    """
    _check_inputs(n, a, r, noise)
    floor = measure_floor(n, a)
    offset = math.inf if floor >= 1.0 else math.sqrt(noise) * std_normal_quantile(floor)
    return exact_blowup(HalfSpace(dimension=n, noise=noise, offset=offset), a, r)


def ball_radius_for_measure(n: int, noise: float, measure: float) -> float:
    """Radius rho_0 of the centred ball with Pr(||U|| <= rho_0) = measure.

    Raises:
        BracketError: If no bracket containing the root can be found.
    """
    if measure >= 1.0:
        return math.inf
    scale = math.sqrt(noise)

    def excess(radius: float) -> float:
        return chi_cdf(radius / scale, n) - measure

    hi = scale * (math.sqrt(n) + 10.0)
    for _ in range(_MAX_BRACKET_DOUBLINGS):
        if excess(hi) >= 0.0:
            break
        hi *= 2.0
    return bisect_monotone(excess, 0.0, hi, _BALL_RADIUS_TOL * scale, rtol=MIN_RTOL)


def ball_blowup_semianalytic(n: int, a: float, r: float, noise: float = 1.0) -> ConcentrationReport:
    """Blow-up of the centred ball whose measure is 2^(-n a), radius found by bisection."""
    _check_inputs(n, a, r, noise)
    radius = ball_radius_for_measure(n, noise, measure_floor(n, a))
    return exact_blowup(
        Ball(dimension=n, noise=noise, radius=radius), a, r, method="semi-analytic"
    )


def _count_block(
    descriptor: SetDescriptor, rho: float, rng: RngStream, block: int, size: int
) -> int:
    gen = rng.block_generator(block)
    points = gen.standard_normal((size, descriptor.dimension)) * descriptor.scale
    return int(np.count_nonzero(distance_to_set(descriptor, points) <= rho))


def block_sizes(trials: int) -> list[int]:
    full, rest = divmod(trials, MC_BLOCK_TRIALS)
    return [MC_BLOCK_TRIALS] * full + ([rest] if rest else [])


def enlarged_measure_mc(
    descriptor: SetDescriptor,
    rho: float,
    trials: int,
    rng: RngStream,
    workers: int | None = None,
) -> tuple[float, float]:
    """(estimate, standard error) of Pr(U within ``rho`` of A) by sampling.

    Trials run in fixed blocks keyed by block index, so the estimate does not
    depend on ``workers``.
    """
    if trials < MIN_MC_TRIALS:
        raise DomainError(f"Monte Carlo needs at least {MIN_MC_TRIALS} trials, got {trials}")
    workers = default_workers() if workers is None else workers
    sizes = block_sizes(trials)
    hits = sum(
        ordered_map(
            lambda job: _count_block(descriptor, rho, rng, job[0], job[1]),
            list(enumerate(sizes)),
            workers,
        )
    )
    estimate = hits / trials
    return estimate, math.sqrt(estimate * (1.0 - estimate) / trials)


def mc_blowup(
    descriptor: SetDescriptor,
    a: float,
    r: float,
    trials: int,
    rng: RngStream,
    workers: int | None = None,
) -> ConcentrationReport:
    """Monte Carlo blow-up; fails only when estimate + 4 stderr is below the bound.

    The measure floor is checked against the set's closed-form measure.

    Raises:
        MeasureFloorError: If the set's measure is below 2^(-n a).
    """
    n, noise = descriptor.dimension, descriptor.noise
    rho = blowup_radius(n, a, r, noise)
    base = set_measure(descriptor)
    _check_floor(base, measure_floor(n, a), descriptor, a)
    estimate, std_error = enlarged_measure_mc(descriptor, rho, trials, rng, workers)
    bound = theoretical_bound(n, r, noise)
    return _verdict(
        ConcentrationReport(
            descriptor=descriptor,
            a=a,
            r=r,
            radius=rho,
            base_measure=base,
            theoretical_bound=bound,
            adaptive_bound=standard_concentration_bound(rho / descriptor.scale, base),
            measured=estimate,
            method="monte-carlo",
            std_error=std_error,
            trials=trials,
            passed=estimate + MC_STDERR_ALLOWANCE * std_error >= bound,
        )
    )


def scaling_invariance_check(
    descriptor: SetDescriptor,
    a: float,
    r: float,
    trials: int | None = None,
    rng: RngStream | None = None,
    workers: int | None = None,
) -> ScalingReport:
    """Compare the blow-up at the descriptor's noise with its unit-noise rescaling.

    The rescaled set is {w : sqrt(N) w in A} with slack r / sqrt(N). Shapes
    with a closed-form enlargement are compared to 1e-10 unless ``trials`` is
    given; otherwise both sides are sampled and compared to 4 standard errors.
    """
    unit = descriptor.rescaled()
    unit_r = r / descriptor.scale
    if trials is None and has_exact_enlargement(descriptor):
        scaled = exact_blowup(descriptor, a, r)
        rescaled = exact_blowup(unit, a, unit_r)
        allowance = SCALING_EXACT_ALLOWANCE
        method: MeasurementMethod = "exact"
    else:
        if rng is None:
            raise DomainError("the Monte Carlo scaling check needs an RngStream")
        trials = MIN_MC_TRIALS if trials is None else trials
        scaled = mc_blowup(descriptor, a, r, trials, rng, workers)
        rescaled = mc_blowup(unit, a, unit_r, trials, rng, workers)
        allowance = MC_STDERR_ALLOWANCE * math.hypot(scaled.std_error, rescaled.std_error)
        method = "monte-carlo"
    difference = abs(scaled.measured - rescaled.measured)
    return ScalingReport(
        descriptor=descriptor,
        a=a,
        r=r,
        measured=scaled.measured,
        measured_unit_noise=rescaled.measured,
        difference=difference,
        allowance=allowance,
        method=method,
        passed=difference <= allowance,
    )
