"""Deterministic families of toy relay codes and quantizer refinement."""

import math

import numpy as np

from relaylab.models import ToyRelayCode
from relaylab.numerics import DomainError, RngStream

FAMILY_CODEBOOK_SIZES = (2, 4, 8)
FAMILY_CELL_COUNTS = (1, 2, 4, 16, 64)
FAMILY_NOISES = (0.5, 1.0, 2.0)
FAMILY_POWER_LIMIT = 4.0
FAMILY_MIN_POWER = 0.1
# Thresholds are drawn on [-3 sqrt(P), 3 sqrt(P)].
FAMILY_THRESHOLD_SPAN = 3.0


def family_code(seed: int, index: int) -> ToyRelayCode:
    """Code ``index`` of the randomized regression family for ``seed``.

    Each code draws a codebook size, cell count, noise variance and power
    P <= 4 from its own stream; the codebook is Gaussian, rescaled to mean
    square P, and the thresholds are sorted uniform draws on +-3 sqrt(P).
    """
    gen = RngStream(seed=seed, stream=index).generator()
    m = int(gen.choice(FAMILY_CODEBOOK_SIZES))
    k = int(gen.choice(FAMILY_CELL_COUNTS))
    noise = float(gen.choice(FAMILY_NOISES))
    power = float(gen.uniform(FAMILY_MIN_POWER, FAMILY_POWER_LIMIT))
    x = gen.standard_normal(m)
    x *= math.sqrt(power / float(np.mean(x * x)))
    span = FAMILY_THRESHOLD_SPAN * math.sqrt(power)
    thresholds = np.unique(gen.uniform(-span, span, k - 1))
    return ToyRelayCode(
        name=f"family-{index:03d}",
        codebook=x.tolist(),
        thresholds=thresholds.tolist(),
        noise=noise,
        power=FAMILY_POWER_LIMIT,
    )


def code_family(seed: int, count: int) -> list[ToyRelayCode]:
    return [family_code(seed, i) for i in range(count)]


def split_cell(code: ToyRelayCode, cell: int, threshold: float) -> ToyRelayCode:
    """Refine the quantizer by cutting cell ``cell`` (0-based) at ``threshold``.

    Raises:
        DomainError: If the cell does not exist or ``threshold`` is not strictly inside it.
    """
    if not 0 <= cell < code.cells:
        raise DomainError(f"cell must be in [0, {code.cells}), got {cell}")
    lo, hi = code.edges[cell], code.edges[cell + 1]
    if not lo < threshold < hi:
        raise DomainError(f"threshold {threshold} is not inside cell {cell} = ({lo}, {hi})")
    thresholds = sorted([*code.thresholds, threshold])
    return code.model_copy(update={"thresholds": thresholds})
