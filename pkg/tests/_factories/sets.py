from typing import Any, Mapping

from pydantic import TypeAdapter

from relaylab.models import Ball, HalfSpace, Rectangle, SetDescriptor, Slab

_ADAPTER: TypeAdapter[SetDescriptor] = TypeAdapter(SetDescriptor)


class SetDescriptorFactory:
    """One default set per shape; ``make`` overrides fields and re-validates."""

    def __init__(self):
        self.defaults: dict[str, HalfSpace | Ball | Slab | Rectangle] = {
            "half-space": HalfSpace(dimension=1, offset=0.0),
            "ball": Ball(dimension=2, radius=1.5),
            "slab": Slab(dimension=1, lower=-1.0, upper=1.0),
            "rectangle": Rectangle(dimension=2, lower=[-1.0, -1.0], upper=[1.0, 1.0]),
        }

    def make(self, shape: str, update: Mapping[str, Any] | None = None) -> SetDescriptor:
        base = self.defaults[shape].model_dump()
        update = dict(update or {})
        # A new dimension resets the default direction to the first axis.
        if "dimension" in update and "direction" not in update:
            base.pop("direction", None)
        return _ADAPTER.validate_python({**base, **update})
