from .channel import ChannelParamsFactory
from .relay_code import ToyRelayCodeFactory
from .sets import SetDescriptorFactory

__all__ = [
    "ChannelParamsFactory",
    "ToyRelayCodeFactory",
    "SetDescriptorFactory",
]
