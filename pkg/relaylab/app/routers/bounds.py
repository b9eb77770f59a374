import logging

from fastapi import APIRouter, Query

from relaylab.app.models import AStarResponse, CutsetResponse, PreconstantResponse
from relaylab.bounds import bound_report, cutset_bound, network_gap_preconstant, solve_a_star
from relaylab.models import BoundReport, ChannelParams

from ._helpers import translate_errors

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/bounds", tags=["bounds"])


@router.get("", response_model=BoundReport | CutsetResponse)
def get_bounds(
    r0: float = Query(ge=0),
    snr: float | None = Query(default=None, ge=0),
    snr1: float | None = Query(default=None, ge=0),
    snr2: float | None = Query(default=None, ge=0),
) -> BoundReport | CutsetResponse:
    """Cut-set bound, new bound, a* and gap for one channel.

    Give ``snr`` for the symmetric channel. ``snr1`` and ``snr2`` describe an
    asymmetric channel, for which only the cut-set bound is reported.
    """
    with translate_errors():
        if snr1 is not None or snr2 is not None:
            params = ChannelParams(r0=r0, snr1=snr1, snr2=snr2)
            cutset, binding = cutset_bound(params)
            return CutsetResponse(r0=r0, cutset=cutset, cutset_binding=binding)
        if snr is None:
            raise ValueError("either snr or both snr1 and snr2 are required")
        return bound_report(ChannelParams.symmetric(snr, r0))


@router.get("/astar", response_model=AStarResponse)
def get_a_star(r0: float = Query(ge=0)) -> AStarResponse:
    with translate_errors():
        return AStarResponse(r0=r0, a_star=solve_a_star(r0))


@router.get("/preconstant", response_model=PreconstantResponse)
def get_preconstant(delta: float = 0.053517, antennas: int = 4) -> PreconstantResponse:
    """Network gap per node, ``delta / antennas``."""
    with translate_errors():
        return PreconstantResponse(
            delta=delta,
            antennas=antennas,
            preconstant=network_gap_preconstant(delta, antennas),
        )
