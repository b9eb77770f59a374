from .channel import (
    AsymptoteReport,
    BoundReport,
    ChannelParams,
    CutsetBinding,
    NewBinding,
)
from .concentration import (
    Ball,
    BallExperiment,
    ConcentrationReport,
    ExactExperiment,
    ExperimentConfig,
    ExperimentRecord,
    HalfSpace,
    HalfSpaceExperiment,
    MonteCarloExperiment,
    NoiseNormExperiment,
    NoiseNormReport,
    Rectangle,
    ScalingExperiment,
    ScalingReport,
    SetDescriptor,
    Slab,
)
from .golden import GoldenFile, GoldenRecord
from .output import OutputFormat, OutputTag
from .relay import (
    EntropyBoundCheck,
    EntropyReport,
    RateChainCheck,
    RelayVerification,
    ToyRelayCode,
)
from .sweep import (
    FixedSnrMaximizer,
    GapRow,
    GapSurface,
    Maximizer,
    MaximizerRecord,
    SweepSpec,
)

__all__ = [
    "AsymptoteReport",
    "Ball",
    "BallExperiment",
    "BoundReport",
    "ChannelParams",
    "ConcentrationReport",
    "CutsetBinding",
    "EntropyBoundCheck",
    "EntropyReport",
    "ExactExperiment",
    "ExperimentConfig",
    "ExperimentRecord",
    "FixedSnrMaximizer",
    "GapRow",
    "GapSurface",
    "GoldenFile",
    "GoldenRecord",
    "HalfSpace",
    "HalfSpaceExperiment",
    "Maximizer",
    "MaximizerRecord",
    "MonteCarloExperiment",
    "NewBinding",
    "NoiseNormExperiment",
    "NoiseNormReport",
    "OutputFormat",
    "OutputTag",
    "RateChainCheck",
    "Rectangle",
    "RelayVerification",
    "ScalingExperiment",
    "ScalingReport",
    "SetDescriptor",
    "Slab",
    "SweepSpec",
    "ToyRelayCode",
]
