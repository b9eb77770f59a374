"""The regression corpora shipped in ``data/``."""

import json
from pathlib import Path
from typing import Any

from relaylab.concentration import parse_experiments
from relaylab.models import ToyRelayCode
from relaylab.relay import code_family, read_codes_jsonl

from .goldens import DATA_DIR

CONCENTRATION_SUITE_PATH = DATA_DIR / "concentration_suite.json"
RELAY_FAMILY_PATH = DATA_DIR / "relay_family.json"
RELAY_CODES_PATH = DATA_DIR / "relay_codes.jsonl"


def load_concentration_suite(path: Path = CONCENTRATION_SUITE_PATH) -> list[dict[str, Any]]:
    return parse_experiments(path.read_bytes())


def load_relay_family(path: Path = RELAY_FAMILY_PATH) -> list[ToyRelayCode]:
    """The randomized family described by ``{"seed": ..., "count": ...}``."""
    spec = json.loads(path.read_text())
    return code_family(int(spec["seed"]), int(spec["count"]))


def load_regression_codes(path: Path = RELAY_CODES_PATH) -> list[ToyRelayCode]:
    with path.open() as lines:
        return read_codes_jsonl(lines)
