"""JSON-lines input and output for relay-code verification."""

import logging
from collections.abc import Iterable, Iterator

from pydantic import ValidationError

from relaylab.config import default_workers
from relaylab.models import RelayVerification, ToyRelayCode
from relaylab.numerics import DEFAULT_QUADRATURE, QuadratureSpec
from relaylab.utils.pool import ordered_map

from .entropy import verify_code

logger = logging.getLogger(__name__)


class MalformedCodeError(ValueError):
    """A JSON-lines record that is not a valid toy relay code."""

    def __init__(self, line_number: int, detail: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {detail}")


def read_codes_jsonl(lines: Iterable[str]) -> list[ToyRelayCode]:
    """Parse one code per non-blank line.

    Raises:
        MalformedCodeError: At the first line that fails to parse, with its
            1-based line number.
    """
    codes = []
    for line_number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            codes.append(ToyRelayCode.model_validate_json(line))
        except ValidationError as exc:
            detail = "; ".join(
                f"{'.'.join(str(p) for p in err['loc']) or 'record'}: {err['msg']}"
                for err in exc.errors()
            )
            raise MalformedCodeError(line_number, detail) from None
    return codes


def verify_codes(
    codes: Iterable[ToyRelayCode],
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
    workers: int | None = None,
) -> Iterator[RelayVerification]:
    """Verification reports in input order."""
    workers = default_workers() if workers is None else workers
    batch = list(codes)
    logger.info("verifying %d relay codes with %d worker(s)", len(batch), workers)
    yield from ordered_map(lambda code: verify_code(code, quad), batch, workers)
