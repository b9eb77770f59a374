from .bundled import (
    CONCENTRATION_SUITE_PATH,
    RELAY_CODES_PATH,
    RELAY_FAMILY_PATH,
    load_concentration_suite,
    load_regression_codes,
    load_relay_family,
)
from .goldens import (
    GOLDEN_PATH,
    GoldenDriftError,
    check_record,
    input_digest,
    load_goldens,
    regenerate_goldens,
)

__all__ = [
    "CONCENTRATION_SUITE_PATH",
    "RELAY_CODES_PATH",
    "RELAY_FAMILY_PATH",
    "load_concentration_suite",
    "load_regression_codes",
    "load_relay_family",
    "GOLDEN_PATH",
    "GoldenDriftError",
    "check_record",
    "input_digest",
    "load_goldens",
    "regenerate_goldens",
]
