"""Gap surfaces over the (snr, r0) plane and the search for their maximum.

The gap is nondecreasing in snr and unimodal in r0 at fixed snr (it follows
a*(r0) up to r0 = C_bc - C_pt, then falls to zero), so the maximizer search
is a grid scan followed by a one-dimensional refinement in r0 at the best snr.
"""

import logging
from functools import partial

from relaylab.bounds import (
    CrossCheckError,
    asymptotic_gap_report,
    bound_report,
    capacity_terms,
    gap,
    solve_a_star,
)
from relaylab.config import default_workers
from relaylab.models import (
    ChannelParams,
    FixedSnrMaximizer,
    GapRow,
    GapSurface,
    Maximizer,
    MaximizerRecord,
    SweepSpec,
)
from relaylab.numerics import golden_section_maximize
from relaylab.utils.pool import ordered_map

logger = logging.getLogger(__name__)

# Below this snr the grid maximum sits visibly under the asymptotic value.
ASYMPTOTE_SNR = 1e5
FIXED_SNR_AGREEMENT = 1e-7
FIXED_SNR_SEARCH_TOL = 1e-10


def _gap_at(snr: float, r0: float) -> float:
    return gap(ChannelParams.symmetric(snr, r0))


def _row(snr: float, r0: float) -> GapRow:
    report = bound_report(ChannelParams.symmetric(snr, r0))
    return GapRow(
        snr=snr,
        r0=r0,
        cutset=report.cutset,
        new_bound=report.new_bound,
        gap=report.gap,
    )


def _snr_block(snr: float, r0_values: list[float]) -> list[GapRow]:
    return [_row(snr, r0) for r0 in r0_values]


def sweep(spec: SweepSpec, workers: int | None = None) -> GapSurface:
    """Evaluate every grid point, snr-major, and locate the best row.

    Rows for different snr values may run on a thread pool; the assembled
    surface does not depend on ``workers``.
    """
    workers = default_workers() if workers is None else workers
    snr_values = [float(s) for s in spec.snr_values()]
    r0_values = [float(r) for r in spec.r0_values()]
    logger.info(
        "sweeping %d x %d grid with %d worker(s)",
        len(snr_values),
        len(r0_values),
        workers,
    )
    blocks = ordered_map(partial(_snr_block, r0_values=r0_values), snr_values, workers)
    rows = [row for block in blocks for row in block]
    # max keeps the first of equal rows, so ties resolve in snr-major order
    best = max(rows, key=lambda row: row.gap)
    return GapSurface(
        rows=rows, maximizer=Maximizer(snr=best.snr, r0=best.r0, gap=best.gap)
    )


def _refine_bracket(spec: SweepSpec, r0: float) -> tuple[float, float]:
    if spec.r0_count == 1:
        return r0, r0
    step = (spec.r0_max - spec.r0_min) / (spec.r0_count - 1)
    return max(spec.r0_min, r0 - step), min(spec.r0_max, r0 + step)


def maximize_gap(spec: SweepSpec, workers: int | None = None) -> MaximizerRecord:
    """Largest gap over the grid, refined in r0 at the best snr."""
    if spec.snr_max < ASYMPTOTE_SNR:
        logger.warning(
            "snr_max=%g is below %g; the maximizer will sit under the asymptote",
            spec.snr_max,
            ASYMPTOTE_SNR,
        )
    surface = sweep(spec, workers)
    best = surface.maximizer
    lo, hi = _refine_bracket(spec, best.r0)
    r0, refined_gap = golden_section_maximize(
        partial(_gap_at, best.snr), lo, hi, spec.tolerance
    )
    if refined_gap < best.gap:
        r0, refined_gap = best.r0, best.gap
    asymptote = asymptotic_gap_report(spec.snr_max)
    logger.info(
        "maximizer: snr=%g r0=%.9f gap=%.9f", best.snr, r0, refined_gap
    )
    return MaximizerRecord(
        snr=best.snr,
        r0=r0,
        gap=refined_gap,
        grid_best=best,
        asymptote=asymptote,
    )


def fixed_snr_maximizer(snr: float) -> FixedSnrMaximizer:
    """Best r0 at a fixed snr: r0* = C_bc - C_pt and gap* = a*(r0*).

    The closed form is checked against a bounded search over
    [0, r0* + a*(r0*)], where the gap is strictly positive away from 0.

    Raises:
        CrossCheckError: If the search and the closed form differ by more than 1e-7.
    """
    c_bc, c_pt = capacity_terms(ChannelParams.symmetric(snr, 0.0))
    r0_star = c_bc - c_pt
    gap_star = solve_a_star(r0_star)
    search_r0, search_gap = golden_section_maximize(
        partial(_gap_at, snr), 0.0, r0_star + gap_star, FIXED_SNR_SEARCH_TOL
    )
    if abs(search_gap - gap_star) > FIXED_SNR_AGREEMENT:
        logger.error(
            "fixed-snr maximizer mismatch at snr=%g: closed form %.12g, search %.12g",
            snr,
            gap_star,
            search_gap,
        )
        raise CrossCheckError(
            f"closed-form gap {gap_star!r} and search {search_gap!r} disagree at snr={snr}"
        )
    return FixedSnrMaximizer(
        snr=snr,
        r0=r0_star,
        gap=gap_star,
        search_r0=search_r0,
        search_gap=search_gap,
    )
