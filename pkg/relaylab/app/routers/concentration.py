import logging
from typing import Any

from fastapi import APIRouter, Body, Query, Response

from relaylab.concentration import parse_experiment, run_experiment
from relaylab.config import default_seed
from relaylab.config.settings import MAX_SEED

from ._helpers import machine_json, translate_errors

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/concentration", tags=["concentration"])


@router.post("/experiments")
def post_experiment(
    entry: dict[str, Any] = Body(),
    seed: int | None = Query(default=None, ge=0, le=MAX_SEED),
) -> Response:
    """Run one blow-up, scaling or noise-norm experiment.

    The body is a single experiment config, the same shape as one entry of a
    batch file. Sampling experiments use ``seed`` (``RELAYLAB_SEED`` when
    omitted) so a repeated request gives the same report.
    """
    with translate_errors():
        config = parse_experiment(entry)
        seed = default_seed() if seed is None else seed
        report = run_experiment(config, seed)
    if not report.passed:
        logger.warning("experiment %s failed its verdict", config.experiment)
    return machine_json(report)
