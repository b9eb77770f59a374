"""Entropy quantities of single-letter relay codes, and the inequalities they satisfy.

The source sends X uniformly from a scalar codebook. The destination sees
Y = X + W1 and the relay sees Z = X + W2, both noises N(0, N). The relay
forwards I, the threshold cell of Z. Every quantity reduces to cell
probabilities (normal CDF differences) and one-dimensional Gaussian mixture
entropies.
"""

import logging
import math

import numpy as np
from numpy.typing import NDArray

from relaylab.models import (
    EntropyBoundCheck,
    EntropyReport,
    RateChainCheck,
    RelayVerification,
    ToyRelayCode,
)
from relaylab.numerics import (
    DEFAULT_QUADRATURE,
    LN2,
    QuadratureSpec,
    discrete_entropy,
    equivocation,
    gaussian_entropy,
    mixture_entropies,
    normal_interval_probability,
)

logger = logging.getLogger(__name__)

# Allowance for quadrature error in the entropy bound and the rate chain.
QUADRATURE_ALLOWANCE = 1e-6
# I(X;Z) and I(X;Y) come from different adaptive integrals; floor on their agreement.
SYMMETRY_TOLERANCE = 1e-8


def relay_penalty(a: float) -> float:
    """a + sqrt(2a / ln 2), the rate a relay index can add beyond I(X;Y)."""
    return a + math.sqrt(2.0 * max(a, 0.0) / LN2)


def cell_probabilities(code: ToyRelayCode) -> NDArray[np.float64]:
    """p(I = k | X = x_m), one row per codeword and one column per cell."""
    x = np.asarray(code.codebook, dtype=float)[:, None]
    edges = code.edges
    sd = math.sqrt(code.noise)
    return normal_interval_probability((edges[:-1] - x) / sd, (edges[1:] - x) / sd)


def _symbol_cell_probabilities(code: ToyRelayCode) -> tuple[
    NDArray[np.float64], NDArray[np.float64], NDArray[np.float64]
]:
    symbols, prior = code.symbol_distribution()
    distinct = code.model_copy(update={"codebook": symbols.tolist()})
    return symbols, prior, cell_probabilities(distinct)


def entropy_quantities(
    code: ToyRelayCode, quad: QuadratureSpec = DEFAULT_QUADRATURE
) -> EntropyReport:
    """a = H(I|X), b = H(X|I), c = H(X|Z), h(Y|I) and the mutual informations.

    h(Y) and every h(Y | I = k) come out of one adaptive integration, so the
    constant-relay case compares identical numbers. I(X;Z) is evaluated
    separately as H(X) - H(X|Z) from the posterior of X given Z.

    Raises:
        QuadratureError: If the mixture entropies cannot reach ``quad.tolerance``.
    """
    symbols, prior, cells = _symbol_cell_probabilities(code)
    h_noise = gaussian_entropy(code.noise)
    h_x = discrete_entropy(prior)

    a = float(np.sum(prior * np.array([discrete_entropy(row) for row in cells])))
    joint = prior[:, None] * cells  # p(x, k)
    p_cell = joint.sum(axis=0)
    b = h_x + a - discrete_entropy(p_cell)

    used = p_cell > 0.0
    posteriors = (joint[:, used] / p_cell[used]).T
    posteriors /= posteriors.sum(axis=1, keepdims=True)
    entropies = mixture_entropies(
        np.vstack([prior[None, :], posteriors]), symbols, code.noise, quad
    )
    h_y = float(entropies[0])
    h_y_given_i = float(np.dot(p_cell[used], entropies[1:]))

    i_xy = h_y - h_noise
    i_xz = h_x - equivocation(prior, symbols, code.noise, quad)
    c = h_x - i_xy
    rhs = b - c + h_noise + relay_penalty(a)

    # (Y + Z) / 2 is sufficient for X given both observations.
    h_combined = float(mixture_entropies(prior[None, :], symbols, code.noise / 2.0, quad)[0])
    i_xyz = h_combined - gaussian_entropy(code.noise / 2.0)

    return EntropyReport(
        a=a,
        b=b,
        c=c,
        h_y_given_i=h_y_given_i,
        rhs=rhs,
        slack=rhs - h_y_given_i,
        h_x=h_x,
        h_y=h_y,
        i_xy=i_xy,
        i_xz=i_xz,
        i_xi=h_x - b,
        i_xyi=h_x - b + h_y_given_i - h_noise,
        i_xyz=i_xyz,
    )


def check_entropy_bound(
    code: ToyRelayCode,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
    *,
    report: EntropyReport | None = None,
) -> EntropyBoundCheck:
    """h(Y|I) <= b - c + h(Y|X) + a + sqrt(2a / ln 2), up to quadrature error."""
    report = report if report is not None else entropy_quantities(code, quad)
    passed = report.slack >= -QUADRATURE_ALLOWANCE
    if not passed:
        logger.warning("entropy bound fails for %s: slack %.3e", code.name, report.slack)
    return EntropyBoundCheck(slack=report.slack, passed=passed)


def check_rate_chain(
    code: ToyRelayCode,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
    *,
    report: EntropyReport | None = None,
) -> RateChainCheck:
    """I(X;Y,I) <= I(X;Y) + a + sqrt(2a / ln 2), with symmetry and data processing.

    I(X;Z) must equal I(X;Y) since both links carry the same noise, and
    I(X;I) <= I(X;Z), I(X;Y,I) <= I(X;Y,Z) must hold.
    """
    report = report if report is not None else entropy_quantities(code, quad)
    rate_bound = report.i_xy + relay_penalty(report.a)
    chain_slack = rate_bound - report.i_xyi
    symmetric_difference = abs(report.i_xz - report.i_xy)
    symmetry_tolerance = (
        max(SYMMETRY_TOLERANCE, 2.0 * quad.tolerance)
        if quad.method == "adaptive"
        else QUADRATURE_ALLOWANCE
    )
    data_processing_ok = (
        report.i_xi <= report.i_xz + QUADRATURE_ALLOWANCE
        and report.i_xyi <= report.i_xyz + QUADRATURE_ALLOWANCE
    )
    passed = (
        chain_slack >= -QUADRATURE_ALLOWANCE
        and symmetric_difference <= symmetry_tolerance
        and data_processing_ok
    )
    if not passed:
        logger.warning(
            "rate chain fails for %s: slack %.3e, symmetry %.3e, data processing %s",
            code.name,
            chain_slack,
            symmetric_difference,
            data_processing_ok,
        )
    return RateChainCheck(
        rate_bound=rate_bound,
        chain_slack=chain_slack,
        symmetric_difference=symmetric_difference,
        data_processing_ok=data_processing_ok,
        passed=passed,
    )


def verify_code(
    code: ToyRelayCode, quad: QuadratureSpec = DEFAULT_QUADRATURE
) -> RelayVerification:
    report = entropy_quantities(code, quad)
    entropy_bound = check_entropy_bound(code, quad, report=report)
    rate_chain = check_rate_chain(code, quad, report=report)
    return RelayVerification(
        name=code.name,
        report=report,
        entropy_bound=entropy_bound,
        rate_chain=rate_chain,
        passed=entropy_bound.passed and rate_chain.passed,
    )
