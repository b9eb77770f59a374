"""Shared pieces for the compute routers."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

from fastapi import HTTPException, Response

from relaylab.utils.formatting import render_json

logger = logging.getLogger(__name__)


@contextmanager
def translate_errors() -> Iterator[None]:
    """Map rejected inputs to 422 and numerical failures to 500.

    pydantic's ``ValidationError`` is a ``ValueError``, so invalid parameter
    combinations also land on 422.
    """
    try:
        yield
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except ArithmeticError as exc:
        logger.exception("numerical failure")
        raise HTTPException(status_code=500, detail=str(exc)) from exc


def machine_json(value: Any) -> Response:
    """JSON with 17-digit floats; also carries infinite half-space offsets."""
    return Response(content=render_json(value), media_type="application/json")
