from .bounds import router as bounds_router
from .concentration import router as concentration_router
from .gap import router as gap_router
from .relay import router as relay_router

__all__ = [
    "bounds_router",
    "concentration_router",
    "gap_router",
    "relay_router",
]
