"""FastAPI application for relaylab.

A read-only compute surface over the bounds, the gap optimizer, the
concentration experiments and relay-code verification. Nothing is stored
between requests.
"""

# This file loads env variables and must thus be imported before anything else.
from . import env_loader  # noqa: F401
from .env_loader import get_current_environment

import logging

from fastapi import FastAPI, Response
from fastapi.middleware.gzip import GZipMiddleware

from relaylab.config import configure_logging

from .models import EnvironmentResponse
from .routers import bounds_router, concentration_router, gap_router, relay_router

logger = logging.getLogger(__name__)

app = FastAPI(title="relaylab")
app.include_router(bounds_router)
app.include_router(gap_router)
app.include_router(concentration_router)
app.include_router(relay_router)
# Sweep surfaces are large and compress well. Responses under minimum_size are
# left untouched.
app.add_middleware(GZipMiddleware, minimum_size=1000)  # type: ignore[arg-type]

configure_logging()


@app.get("/health")
@app.options("/health")
def health_check(response: Response) -> dict[str, str]:
    """Health check endpoint that returns 200 status with CORS from anywhere."""
    response.headers["Access-Control-Allow-Origin"] = "*"
    response.headers["Access-Control-Allow-Methods"] = "GET, OPTIONS"
    response.headers["Access-Control-Allow-Headers"] = "*"
    return {"status": "healthy"}


@app.get("/environment", response_model=EnvironmentResponse)
def get_environment() -> EnvironmentResponse:
    """Get the current environment configuration."""
    return EnvironmentResponse(environment=get_current_environment())
