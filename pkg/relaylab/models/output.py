from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict

OutputTag = Literal["table", "json", "csv"]


class OutputFormat(BaseModel):
    """Where a result goes and in what shape. ``None`` destination means stdout."""

    model_config = ConfigDict(frozen=True)

    tag: OutputTag = "table"
    destination: Path | None = None

    def require_rows(self, row_shaped: bool, what: str) -> None:
        if self.tag == "csv" and not row_shaped:
            raise ValueError(f"csv output is only available for row-shaped results, not {what}")
