"""Set descriptors and experiment reports for Gaussian blow-up measurements."""

import math
from typing import Annotated, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

MeasurementMethod = Literal["exact", "semi-analytic", "monte-carlo"]


def _unit(direction: list[float] | None, dimension: int) -> list[float]:
    if direction is None:
        return [1.0] + [0.0] * (dimension - 1)
    if len(direction) != dimension:
        raise ValueError(
            f"direction has {len(direction)} entries but dimension is {dimension}"
        )
    norm = math.sqrt(math.fsum(v * v for v in direction))
    if not norm > 0.0 or not math.isfinite(norm):
        raise ValueError("direction must be a finite nonzero vector")
    return [v / norm for v in direction]


def _check_bound(name: str, value: float, allow: float) -> None:
    """Reject NaN, and the one infinity that would make the set empty."""
    if math.isnan(value) or (math.isinf(value) and value != allow):
        raise ValueError(f"{name} must be finite or {allow}, got {value}")


class _SetBase(BaseModel):
    model_config = ConfigDict(frozen=True)

    dimension: int = Field(ge=1)
    noise: float = Field(default=1.0, gt=0, allow_inf_nan=False)

    @property
    def scale(self) -> float:
        return math.sqrt(self.noise)


class HalfSpace(_SetBase):
    """{x : <direction, x> <= offset}, with ``direction`` normalized on load.

    ``offset`` may be +inf (the whole space) but not -inf.
    """

    shape: Literal["half-space"] = "half-space"
    direction: list[float] | None = None
    offset: float

    @model_validator(mode="after")
    def _normalize(self) -> Self:
        _check_bound("offset", self.offset, allow=math.inf)
        object.__setattr__(self, "direction", _unit(self.direction, self.dimension))
        return self

    def rescaled(self) -> "HalfSpace":
        return self.model_copy(update={"noise": 1.0, "offset": self.offset / self.scale})


class Ball(_SetBase):
    """Closed Euclidean ball of ``radius`` centred at the origin."""

    shape: Literal["ball"] = "ball"
    radius: float = Field(ge=0)

    @model_validator(mode="after")
    def _check(self) -> Self:
        _check_bound("radius", self.radius, allow=math.inf)
        return self

    def rescaled(self) -> "Ball":
        return self.model_copy(update={"noise": 1.0, "radius": self.radius / self.scale})


class Slab(_SetBase):
    """{x : lower <= <direction, x> <= upper}."""

    shape: Literal["slab"] = "slab"
    direction: list[float] | None = None
    lower: float
    upper: float

    @model_validator(mode="after")
    def _check(self) -> Self:
        _check_bound("lower", self.lower, allow=-math.inf)
        _check_bound("upper", self.upper, allow=math.inf)
        if not self.lower <= self.upper:
            raise ValueError(f"slab needs lower <= upper, got {self.lower} > {self.upper}")
        object.__setattr__(self, "direction", _unit(self.direction, self.dimension))
        return self

    def rescaled(self) -> "Slab":
        return self.model_copy(
            update={
                "noise": 1.0,
                "lower": self.lower / self.scale,
                "upper": self.upper / self.scale,
            }
        )


class Rectangle(_SetBase):
    """Axis-aligned box prod_i [lower_i, upper_i]."""

    shape: Literal["rectangle"] = "rectangle"
    lower: list[float]
    upper: list[float]

    @model_validator(mode="after")
    def _check(self) -> Self:
        if len(self.lower) != self.dimension or len(self.upper) != self.dimension:
            raise ValueError("rectangle bounds must have one entry per dimension")
        for lo, hi in zip(self.lower, self.upper):
            _check_bound("lower", lo, allow=-math.inf)
            _check_bound("upper", hi, allow=math.inf)
        if any(not lo <= hi for lo, hi in zip(self.lower, self.upper)):
            raise ValueError("rectangle needs lower_i <= upper_i in every coordinate")
        return self

    def rescaled(self) -> "Rectangle":
        s = self.scale
        return self.model_copy(
            update={
                "noise": 1.0,
                "lower": [v / s for v in self.lower],
                "upper": [v / s for v in self.upper],
            }
        )


SetDescriptor = Annotated[HalfSpace | Ball | Slab | Rectangle, Field(discriminator="shape")]


class ConcentrationReport(BaseModel):
    """One blow-up measurement against the blow-up bound.

    ``measured`` >= ``adaptive_bound`` >= ``theoretical_bound`` is what a
    passing report shows; the adaptive bound is the classical one evaluated at
    the actual measure of the set, carried for comparison.
    """

    descriptor: SetDescriptor
    a: float
    r: float
    radius: float
    base_measure: float
    theoretical_bound: float
    adaptive_bound: float
    measured: float
    method: MeasurementMethod
    std_error: float = 0.0
    trials: int | None = None
    passed: bool


class ScalingReport(BaseModel):
    """Blow-up of a set at noise N compared with its rescaled unit-noise copy."""

    descriptor: SetDescriptor
    a: float
    r: float
    measured: float
    measured_unit_noise: float
    difference: float
    allowance: float
    method: MeasurementMethod
    passed: bool


class NoiseNormReport(BaseModel):
    """Pr(| ||W|| / sqrt(n) - sqrt(N) | <= eps) for W ~ N(0, N I_n), sampled and exact."""

    dimension: int
    noise: float
    eps: float
    trials: int
    probability: float
    std_error: float
    exact: float
    passed: bool


class _ExperimentBase(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str | None = None


class _BlowupInputs(_ExperimentBase):
    a: float = Field(ge=0, allow_inf_nan=False)
    r: float = Field(ge=0, allow_inf_nan=False)


class HalfSpaceExperiment(_BlowupInputs):
    experiment: Literal["halfspace-exact"] = "halfspace-exact"
    dimension: int = Field(ge=1)
    noise: float = Field(default=1.0, gt=0)


class BallExperiment(_BlowupInputs):
    experiment: Literal["ball-exact"] = "ball-exact"
    dimension: int = Field(ge=1)
    noise: float = Field(default=1.0, gt=0)


class ExactExperiment(_BlowupInputs):
    experiment: Literal["exact"] = "exact"
    descriptor: SetDescriptor


class MonteCarloExperiment(_BlowupInputs):
    experiment: Literal["monte-carlo"] = "monte-carlo"
    descriptor: SetDescriptor
    trials: int = Field(default=100_000, ge=1)


class ScalingExperiment(_BlowupInputs):
    experiment: Literal["scaling"] = "scaling"
    descriptor: SetDescriptor
    trials: int | None = Field(default=None, ge=1)


class NoiseNormExperiment(_ExperimentBase):
    experiment: Literal["noise-norm"] = "noise-norm"
    dimension: int = Field(ge=1)
    noise: float = Field(default=1.0, gt=0)
    eps: float = Field(gt=0)
    trials: int = Field(default=100_000, ge=1)


ExperimentConfig = Annotated[
    HalfSpaceExperiment
    | BallExperiment
    | ExactExperiment
    | MonteCarloExperiment
    | ScalingExperiment
    | NoiseNormExperiment,
    Field(discriminator="experiment"),
]

ExperimentResult = ConcentrationReport | ScalingReport | NoiseNormReport


class ExperimentRecord(BaseModel):
    """One line of batch output: a result or the error that stopped it."""

    index: int
    name: str | None = None
    experiment: str
    report: ExperimentResult | None = None
    error: str | None = None

    @computed_field
    @property
    def passed(self) -> bool:
        return self.report is not None and self.report.passed
