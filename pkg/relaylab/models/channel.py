from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

CutsetBinding = Literal["broadcast", "multiple-access"]
NewBinding = Literal["broadcast", "crossing"]

# Slack allowed when re-checking float invariants on assembled reports.
REPORT_TOLERANCE = 1e-12


class ChannelParams(BaseModel):
    """A Gaussian primitive relay channel, described by ratios and the relay rate.

    ``snr`` is P/N for the symmetric channel. ``snr1``/``snr2`` (P/N1, P/N2)
    describe an asymmetric channel; when both are present ``snr`` is ignored.
    ``r0`` is the rate of the relay-destination link in bits per channel use.
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    snr: float = Field(default=0.0, ge=0)
    r0: float = Field(ge=0)
    snr1: float | None = Field(default=None, ge=0)
    snr2: float | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _asymmetric_pair(self) -> Self:
        if (self.snr1 is None) != (self.snr2 is None):
            raise ValueError("snr1 and snr2 must be given together")
        return self

    @property
    def is_asymmetric(self) -> bool:
        return self.snr1 is not None

    @classmethod
    def symmetric(cls, snr: float, r0: float) -> Self:
        return cls(snr=snr, r0=r0)

    @classmethod
    def asymmetric(cls, snr1: float, snr2: float, r0: float) -> Self:
        return cls(snr1=snr1, snr2=snr2, r0=r0)


class BoundReport(BaseModel):
    """Cut-set and new bound side by side, with the binding constraint of each."""

    r0: float
    cutset: float
    new_bound: float
    a_star: float
    gap: float
    cutset_binding: CutsetBinding
    new_binding: NewBinding

    @model_validator(mode="after")
    def _invariants(self) -> Self:
        tol = REPORT_TOLERANCE * max(1.0, abs(self.cutset))
        if abs(self.gap - (self.cutset - self.new_bound)) > tol:
            raise ValueError("gap must equal cutset - new_bound")
        if self.gap < -tol:
            raise ValueError(f"gap must be nonnegative, got {self.gap}")
        if not -tol <= self.a_star <= self.r0 + tol:
            raise ValueError(f"a_star {self.a_star} outside [0, r0={self.r0}]")
        if self.gap > self.a_star + tol:
            raise ValueError(f"gap {self.gap} exceeds a_star {self.a_star}")
        return self


class AsymptoteReport(BaseModel):
    """The P/N -> infinity limit, approached at a finite snr.

    ``broadcast_excess`` is C_bc - C_pt at ``snr`` and tends to 0.5; the gap
    supremum is a*(0.5). ``error_estimate`` is log2(e) / (2 snr), an upper
    bound on 0.5 - broadcast_excess, infinite at snr 0.
    """

    snr: float
    broadcast_excess: float
    limit_excess: float
    sup_gap: float
    error_estimate: float
