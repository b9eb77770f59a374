import logging
from typing import Literal

from fastapi import APIRouter, Depends, Query, Response

from relaylab.app.models import GapResponse
from relaylab.bounds import gap
from relaylab.models import (
    ChannelParams,
    FixedSnrMaximizer,
    GapSurface,
    MaximizerRecord,
    SweepSpec,
)
from relaylab.optimize import (
    export_filename,
    fixed_snr_maximizer,
    maximize_gap,
    surface_to_csv,
    sweep,
)

from ._helpers import machine_json, translate_errors

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/gap", tags=["gap"])


def sweep_spec(
    snr_min: float = 0.1,
    snr_max: float = 1e6,
    snr_count: int = 29,
    r0_min: float = 0.0,
    r0_max: float = 2.0,
    r0_count: int = 81,
    tolerance: float = 1e-9,
) -> SweepSpec:
    """Grid query parameters, validated as a ``SweepSpec``."""
    with translate_errors():
        return SweepSpec(
            snr_min=snr_min,
            snr_max=snr_max,
            snr_count=snr_count,
            r0_min=r0_min,
            r0_max=r0_max,
            r0_count=r0_count,
            tolerance=tolerance,
        )


@router.get("", response_model=GapResponse)
def get_gap(snr: float = Query(ge=0), r0: float = Query(ge=0)) -> GapResponse:
    with translate_errors():
        return GapResponse(snr=snr, r0=r0, gap=gap(ChannelParams.symmetric(snr, r0)))


@router.get("/sweep", response_model=GapSurface)
def get_sweep(
    spec: SweepSpec = Depends(sweep_spec),
    format: Literal["json", "csv"] = "json",
) -> Response:
    """Evaluate the gap over the grid.

    CSV comes back as a file download with one line per grid point; JSON is
    the full surface with its maximizer row.
    """
    with translate_errors():
        surface = sweep(spec)
    if format == "csv":
        return Response(
            content=surface_to_csv(surface),
            media_type="text/csv; charset=utf-8",
            headers={
                "Content-Disposition": f'attachment; filename="{export_filename("csv")}"'
            },
        )
    return machine_json(surface)


@router.get("/maximize", response_model=MaximizerRecord)
def get_maximizer(spec: SweepSpec = Depends(sweep_spec)) -> Response:
    """Refined maximizer; the asymptote's error estimate is Infinity at snr 0."""
    with translate_errors():
        record = maximize_gap(spec)
    return machine_json(record)


@router.get("/fixed-snr", response_model=FixedSnrMaximizer)
def get_fixed_snr_maximizer(snr: float = Query(ge=0)) -> FixedSnrMaximizer:
    """Best relay rate at one snr, from the closed form and a bounded search."""
    with translate_errors():
        return fixed_snr_maximizer(snr)
