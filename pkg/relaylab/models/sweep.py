import math
from typing import Self

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .channel import AsymptoteReport


def _check_axis(name: str, lo: float, hi: float, count: int, positive: bool) -> None:
    if not lo <= hi:
        raise ValueError(f"{name}: min must be <= max, got {lo} and {hi}")
    if count == 1 and lo != hi:
        raise ValueError(f"{name}: a single-point grid needs min == max")
    if positive and count > 1 and lo <= 0:
        raise ValueError(f"{name}: a log-spaced grid needs min > 0, got {lo}")


class SweepSpec(BaseModel):
    """An snr-by-r0 grid: snr log-spaced, r0 linear.

    A count of 1 pins the axis to a single value (min must equal max), which is
    how fixed-snr or single-cell sweeps are written.
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    snr_min: float = Field(default=0.1, ge=0)
    snr_max: float = Field(default=1e6, ge=0)
    snr_count: int = Field(default=29, ge=1)
    r0_min: float = Field(default=0.0, ge=0)
    r0_max: float = Field(default=2.0, ge=0)
    r0_count: int = Field(default=81, ge=1)
    tolerance: float = Field(default=1e-9, gt=0)

    @model_validator(mode="after")
    def _grids(self) -> Self:
        _check_axis("snr", self.snr_min, self.snr_max, self.snr_count, positive=True)
        _check_axis("r0", self.r0_min, self.r0_max, self.r0_count, positive=False)
        return self

    def snr_values(self) -> NDArray[np.float64]:
        if self.snr_count == 1:
            return np.array([self.snr_min])
        return np.geomspace(self.snr_min, self.snr_max, self.snr_count)

    def r0_values(self) -> NDArray[np.float64]:
        if self.r0_count == 1:
            return np.array([self.r0_min])
        return np.linspace(self.r0_min, self.r0_max, self.r0_count)


class GapRow(BaseModel):
    snr: float
    r0: float
    cutset: float
    new_bound: float
    gap: float


class Maximizer(BaseModel):
    snr: float
    r0: float
    gap: float


class GapSurface(BaseModel):
    """Sampled gap over a grid, in snr-major order, with its best row."""

    rows: list[GapRow]
    maximizer: Maximizer

    @model_validator(mode="after")
    def _maximizer_dominates(self) -> Self:
        if any(row.gap > self.maximizer.gap for row in self.rows):
            raise ValueError("maximizer gap must be >= every row's gap")
        return self


class MaximizerRecord(Maximizer):
    """Refined maximizer, together with the best grid row and the asymptote at snr_max."""

    grid_best: Maximizer
    asymptote: AsymptoteReport


class FixedSnrMaximizer(BaseModel):
    """Closed-form maximizer over r0 at one snr, with its numerical cross-check."""

    snr: float
    r0: float
    gap: float
    search_r0: float
    search_gap: float

    @property
    def agreement(self) -> float:
        return math.fabs(self.gap - self.search_gap)
