import logging

from fastapi import APIRouter, Query

from relaylab.models import BoundReport, RelayVerification, ToyRelayCode
from relaylab.relay import input_bounds, verify_code

from ._helpers import translate_errors

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/relay", tags=["relay"])


@router.post("/verify", response_model=RelayVerification)
def post_verify(code: ToyRelayCode) -> RelayVerification:
    """Entropy bound and rate chain for one toy relay code."""
    with translate_errors():
        verification = verify_code(code)
    if not verification.passed:
        logger.warning("relay code %s failed verification", code.name)
    return verification


@router.post("/input-bounds", response_model=BoundReport)
def post_input_bounds(code: ToyRelayCode, r0: float = Query(ge=0)) -> BoundReport:
    """Cut-set and new bound at the code's own input distribution."""
    with translate_errors():
        return input_bounds(code, r0)
