"""Batch experiments: a JSON array of configs in, one JSON record per line out."""

import logging
from collections.abc import Iterator, Sequence
from typing import Any

from pydantic import TypeAdapter, ValidationError

from relaylab.models import (
    BallExperiment,
    ExactExperiment,
    ExperimentConfig,
    ExperimentRecord,
    HalfSpaceExperiment,
    MonteCarloExperiment,
    NoiseNormExperiment,
    ScalingExperiment,
)
from relaylab.models.concentration import ExperimentResult
from relaylab.numerics import RngStream

from .blowup import (
    ball_blowup_semianalytic,
    exact_blowup,
    halfspace_blowup_exact,
    mc_blowup,
    scaling_invariance_check,
)
from .norm import noise_norm_concentration

logger = logging.getLogger(__name__)

_CONFIG_ADAPTER: TypeAdapter[ExperimentConfig] = TypeAdapter(ExperimentConfig)
_RAW_ADAPTER = TypeAdapter(list[dict[str, Any]])


def parse_experiments(text: str | bytes) -> list[dict[str, Any]]:
    """The raw entries of a JSON array of experiment configs.

    Entries are validated one at a time by ``run_batch`` so a bad entry
    does not hide the others.

    Raises:
        ValidationError: If the document is not a JSON array of objects.
    """
    return _RAW_ADAPTER.validate_json(text)


def parse_experiment(entry: dict[str, Any]) -> ExperimentConfig:
    """Validate one entry against the experiment union, keyed on ``"experiment"``."""
    return _CONFIG_ADAPTER.validate_python(entry)


def run_experiment(
    config: ExperimentConfig,
    seed: int,
    index: int = 0,
    workers: int | None = None,
) -> ExperimentResult:
    """Run one experiment. Sampling experiments draw from stream ``index`` of ``seed``."""
    rng = RngStream(seed=seed, stream=index)
    match config:
        case HalfSpaceExperiment():
            return halfspace_blowup_exact(config.dimension, config.a, config.r, config.noise)
        case BallExperiment():
            return ball_blowup_semianalytic(config.dimension, config.a, config.r, config.noise)
        case ExactExperiment():
            return exact_blowup(config.descriptor, config.a, config.r)
        case MonteCarloExperiment():
            return mc_blowup(config.descriptor, config.a, config.r, config.trials, rng, workers)
        case ScalingExperiment():
            return scaling_invariance_check(
                config.descriptor, config.a, config.r, config.trials, rng, workers
            )
        case NoiseNormExperiment():
            return noise_norm_concentration(
                config.dimension, config.noise, config.eps, config.trials, rng, workers
            )


def run_batch(
    entries: Sequence[dict[str, Any]],
    seed: int,
    workers: int | None = None,
) -> Iterator[ExperimentRecord]:
    """One record per entry, in order; invalid entries become error records."""
    for index, entry in enumerate(entries):
        name = entry.get("name")
        experiment = str(entry.get("experiment", "?"))
        try:
            config = parse_experiment(entry)
            report = run_experiment(config, seed, index, workers)
        except (ValidationError, ValueError) as exc:
            logger.warning("experiment %d (%s) rejected: %s", index, experiment, exc)
            yield ExperimentRecord(
                index=index,
                name=name if isinstance(name, str) else None,
                experiment=experiment,
                error=f"{type(exc).__name__}: {exc}",
            )
            continue
        yield ExperimentRecord(
            index=index, name=config.name, experiment=config.experiment, report=report
        )
