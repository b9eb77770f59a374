"""Cut-set bound, new bound, the a* crossing point and the gap between them.

Every rate is in bits per channel use. The recurring penalty
sqrt(2 a ln 2) log2(e) is written sqrt(2 a / ln 2).
"""

import functools
import logging
import math

from relaylab.models import AsymptoteReport, BoundReport, ChannelParams
from relaylab.models.channel import CutsetBinding, NewBinding
from relaylab.numerics import LN2, LOG2E, DomainError, bisect_monotone

logger = logging.getLogger(__name__)

# sqrt(2 / ln 2): coefficient of sqrt(a) in the crossing equation.
CROSSING_SLOPE = math.sqrt(2.0 / LN2)
A_STAR_AGREEMENT = 1e-9
A_STAR_BISECT_TOL = 1e-13
# r0 at which the asymptotic gap is attained.
ASYMPTOTIC_R0 = 0.5


class AsymmetricChannelError(ValueError):
    """The new bound is only established for symmetric channels."""


class CrossCheckError(ArithmeticError):
    """A closed form and its numerical search disagree."""


def _half_log2_1p(x: float) -> float:
    return 0.5 * math.log1p(x) / LN2


def capacity_terms(params: ChannelParams) -> tuple[float, float]:
    """(C_bc, C_pt): the broadcast and point-to-point capacities.

    For a symmetric channel C_bc = 1/2 log2(1 + 2 snr) and C_pt = 1/2 log2(1 + snr).
    For an asymmetric one the broadcast side sees snr1 + snr2 and the direct
    link sees snr2.
    """
    if params.is_asymmetric:
        assert params.snr1 is not None and params.snr2 is not None
        return _half_log2_1p(params.snr1 + params.snr2), _half_log2_1p(params.snr2)
    return _half_log2_1p(2.0 * params.snr), _half_log2_1p(params.snr)


def cutset_bound(params: ChannelParams) -> tuple[float, CutsetBinding]:
    c_bc, c_pt = capacity_terms(params)
    multiple_access = c_pt + params.r0
    if c_bc <= multiple_access:
        return c_bc, "broadcast"
    return multiple_access, "multiple-access"


def _a_star_closed_form(r0: float) -> float:
    # u = sqrt(a) solves 2u^2 + b u - r0 = 0; rationalized to keep small r0 exact.
    u = 2.0 * r0 / (CROSSING_SLOPE + math.sqrt(CROSSING_SLOPE**2 + 8.0 * r0))
    return u * u


def _crossing_residual(a: float, r0: float) -> float:
    return 2.0 * a + CROSSING_SLOPE * math.sqrt(a) - r0


@functools.lru_cache(maxsize=4096)
def solve_a_star(r0: float) -> float:
    """Root of 2a + sqrt(2a / ln 2) = r0, from the closed form checked by bisection.

    Raises:
        DomainError: If r0 is negative or not finite.
        CrossCheckError: If the two solutions differ by more than 1e-9.
    """
    if not (math.isfinite(r0) and r0 >= 0.0):
        raise DomainError(f"r0 must be a finite nonnegative rate, got {r0}")
    closed = _a_star_closed_form(r0)
    searched = bisect_monotone(
        lambda a: _crossing_residual(a, r0), 0.0, r0 / 2.0, A_STAR_BISECT_TOL
    )
    if abs(closed - searched) > A_STAR_AGREEMENT:
        logger.error(
            "a* mismatch at r0=%r: closed form %.17g, bisection %.17g",
            r0,
            closed,
            searched,
        )
        raise CrossCheckError(
            f"a*({r0}) closed form {closed!r} and bisection {searched!r} disagree"
        )
    return closed


def _require_symmetric(params: ChannelParams) -> None:
    if params.is_asymmetric:
        raise AsymmetricChannelError(
            "The new bound is only available for symmetric channels; pass snr, not snr1/snr2"
        )


def new_bound_constraints(params: ChannelParams, a: float) -> tuple[float, float, float]:
    """The three constraints on R for a given a in [0, r0].

    Returns (broadcast, multiple access less a, point-to-point plus the
    relay-ambiguity penalty). The new bound is the max over a of their minimum.
    """
    _require_symmetric(params)
    if not 0.0 <= a <= params.r0:
        raise DomainError(f"a must lie in [0, r0={params.r0}], got {a}")
    c_bc, c_pt = capacity_terms(params)
    return (
        c_bc,
        c_pt + params.r0 - a,
        c_pt + a + CROSSING_SLOPE * math.sqrt(a),
    )


def new_bound(params: ChannelParams) -> tuple[float, NewBinding]:
    _require_symmetric(params)
    c_bc, c_pt = capacity_terms(params)
    crossing = c_pt + params.r0 - solve_a_star(params.r0)
    if c_bc <= crossing:
        return c_bc, "broadcast"
    return crossing, "crossing"


def gap(params: ChannelParams) -> float:
    """Cut-set bound minus new bound; lies in [0, a*(r0)]."""
    return bound_report(params).gap


def network_gap_preconstant(delta: float, antennas: int) -> float:
    """Per-node constant implied by a single-relay gap, divided by the antenna count."""
    if antennas < 1:
        raise DomainError(f"antennas must be at least 1, got {antennas}")
    if not (math.isfinite(delta) and delta >= 0.0):
        raise DomainError(f"delta must be a finite nonnegative rate, got {delta}")
    return delta / antennas


def bounds_from_informations(i_yz: float, i_y: float, r0: float) -> BoundReport:
    """Both bounds for a fixed input law, from I(X;Y,Z) and I(X;Y).

    The cut-set bound is min(I(X;Y,Z), I(X;Y) + r0) and the new bound is
    min(I(X;Y,Z), I(X;Y) + r0 - a*(r0)).
    """
    a_star = solve_a_star(r0)
    multiple_access = i_y + r0
    crossing = multiple_access - a_star
    cutset_binding: CutsetBinding = (
        "broadcast" if i_yz <= multiple_access else "multiple-access"
    )
    new_binding: NewBinding = "broadcast" if i_yz <= crossing else "crossing"
    cutset = min(i_yz, multiple_access)
    new = min(i_yz, crossing)
    if cutset_binding == "multiple-access" and new_binding == "crossing":
        gap_value = a_star
    else:
        # cutset - new is within [0, a*] exactly; rounding can leave it by an ulp.
        gap_value = min(a_star, max(0.0, cutset - new))
    return BoundReport(
        r0=r0,
        cutset=cutset,
        new_bound=new,
        a_star=a_star,
        gap=gap_value,
        cutset_binding=cutset_binding,
        new_binding=new_binding,
    )


def bound_report(params: ChannelParams) -> BoundReport:
    _require_symmetric(params)
    c_bc, c_pt = capacity_terms(params)
    return bounds_from_informations(c_bc, c_pt, params.r0)


def asymptotic_gap_report(snr: float) -> AsymptoteReport:
    """How close ``snr`` is to the infinite-snr limit where the gap peaks at r0 = 0.5."""
    if not (math.isfinite(snr) and snr >= 0.0):
        raise DomainError(f"snr must be a finite nonnegative ratio, got {snr}")
    excess = 0.5 * (math.log1p(2.0 * snr) - math.log1p(snr)) / LN2
    return AsymptoteReport(
        snr=snr,
        broadcast_excess=excess,
        limit_excess=ASYMPTOTIC_R0,
        sup_gap=solve_a_star(ASYMPTOTIC_R0),
        error_estimate=LOG2E / (2.0 * snr) if snr > 0.0 else math.inf,
    )
