import math
from typing import Self

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

# Relative slack when comparing the mean square of a codebook against its limit.
POWER_TOLERANCE = 1e-12


class ToyRelayCode(BaseModel):
    """A single-letter relay code: equiprobable scalar codebook, threshold quantizer.

    The relay sees Z = X + W2 and sends the index of the cell of Z. ``thresholds``
    split the line into ``len(thresholds) + 1`` cells, the first and last of
    them unbounded. ``power`` is the declared limit P; the codebook's mean
    square may not exceed it.
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    name: str | None = None
    codebook: list[float] = Field(min_length=1)
    thresholds: list[float] = Field(default_factory=list)
    noise: float = Field(gt=0)
    power: float | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _check(self) -> Self:
        if any(b <= a for a, b in zip(self.thresholds, self.thresholds[1:])):
            raise ValueError("thresholds must be strictly increasing")
        if self.power is not None:
            mean_square = self.mean_square
            if mean_square > self.power * (1.0 + POWER_TOLERANCE):
                raise ValueError(
                    f"codebook mean square {mean_square} exceeds power {self.power}"
                )
        return self

    @property
    def mean_square(self) -> float:
        return math.fsum(x * x for x in self.codebook) / len(self.codebook)

    @property
    def cells(self) -> int:
        return len(self.thresholds) + 1

    @property
    def edges(self) -> NDArray[np.float64]:
        return np.concatenate(([-np.inf], np.asarray(self.thresholds, dtype=float), [np.inf]))

    def symbol_distribution(self) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """Distinct codewords and their probabilities (repeats merge)."""
        values, counts = np.unique(np.asarray(self.codebook, dtype=float), return_counts=True)
        return values, counts / len(self.codebook)


class EntropyReport(BaseModel):
    """Entropy quantities of a toy code, all in bits.

    ``a``, ``b`` and ``c`` are H(I|X), H(X|I) and H(X|Z). ``rhs`` is the upper
    bound b - c + h(Y|X) + a + sqrt(2a / ln 2) on h(Y|I), and
    ``slack = rhs - h_y_given_i``.
    """

    a: float
    b: float
    c: float
    h_y_given_i: float
    rhs: float
    slack: float
    h_x: float
    h_y: float
    i_xy: float
    i_xz: float
    i_xi: float
    i_xyi: float
    i_xyz: float


class EntropyBoundCheck(BaseModel):
    """h(Y|I) <= rhs, passing when the slack is at least -1e-6."""

    slack: float
    passed: bool


class RateChainCheck(BaseModel):
    """I(X;Y,I) <= I(X;Y) + a + sqrt(2a / ln 2), plus the companion checks."""

    rate_bound: float
    chain_slack: float
    symmetric_difference: float
    data_processing_ok: bool
    passed: bool


class RelayVerification(BaseModel):
    name: str | None = None
    report: EntropyReport
    entropy_bound: EntropyBoundCheck
    rate_chain: RateChainCheck
    passed: bool
