from pydantic import BaseModel

from relaylab.config import EnvironmentName
from relaylab.models import CutsetBinding


class EnvironmentResponse(BaseModel):
    environment: EnvironmentName


class AStarResponse(BaseModel):
    """The relay-rate penalty a* solving the crossing equation at ``r0``."""

    r0: float
    a_star: float


class PreconstantResponse(BaseModel):
    """Per-node coefficient of the network approximation gap."""

    delta: float
    antennas: int
    preconstant: float


class GapResponse(BaseModel):
    snr: float
    r0: float
    gap: float


class CutsetResponse(BaseModel):
    """What is defined for an asymmetric channel: the cut-set bound alone."""

    r0: float
    cutset: float
    cutset_binding: CutsetBinding
