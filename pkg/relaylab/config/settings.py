"""Run-time settings read from the environment.

``RELAYLAB_SEED`` is the default seed for Monte Carlo work when ``--seed`` is
not given, and ``RELAYLAB_WORKERS`` sizes the worker pools. Results never
depend on the worker count.
"""

import os

# Arbitrary but fixed, so CI runs are reproducible without any env setup.
DEFAULT_SEED = 20150601
MAX_SEED = 2**64 - 1


def parse_seed(raw: str) -> int:
    """Parse an unsigned 64-bit seed from a string."""
    try:
        seed = int(raw, 0)
    except ValueError:
        raise ValueError(f"Invalid seed: {raw!r} is not an integer") from None
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"Invalid seed: {seed} is outside [0, 2^64)")
    return seed


def default_seed() -> int:
    """Seed from ``RELAYLAB_SEED``, falling back to ``DEFAULT_SEED``."""
    raw = os.getenv("RELAYLAB_SEED")
    if raw is None or raw == "":
        return DEFAULT_SEED
    return parse_seed(raw)


def default_workers() -> int:
    """Worker count from ``RELAYLAB_WORKERS`` (default 1)."""
    raw = os.getenv("RELAYLAB_WORKERS")
    if raw is None or raw == "":
        return 1
    try:
        workers = int(raw)
    except ValueError:
        raise ValueError(f"Invalid RELAYLAB_WORKERS value: {raw!r}") from None
    if workers < 1:
        raise ValueError(f"Invalid RELAYLAB_WORKERS value: {workers} (must be >= 1)")
    return workers
