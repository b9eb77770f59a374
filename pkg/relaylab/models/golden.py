from typing import Any, Literal

from pydantic import BaseModel, Field

Provenance = Literal["PUBLISHED", "TRIVIAL", "DERIVED"]


class GoldenRecord(BaseModel):
    """A reference value with the independent oracle that produced it."""

    name: str
    kind: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    expected: dict[str, float]
    tolerance: float = Field(gt=0)
    provenance: Provenance
    oracle: str
    digest: str = ""


class GoldenFile(BaseModel):
    records: list[GoldenRecord]
