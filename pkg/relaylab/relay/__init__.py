from .batch import MalformedCodeError, read_codes_jsonl, verify_codes
from .corpus import code_family, family_code, split_cell
from .entropy import (
    cell_probabilities,
    check_entropy_bound,
    check_rate_chain,
    entropy_quantities,
    relay_penalty,
    verify_code,
)
from .input_bounds import input_bounds

__all__ = [
    "MalformedCodeError",
    "cell_probabilities",
    "check_entropy_bound",
    "check_rate_chain",
    "code_family",
    "entropy_quantities",
    "family_code",
    "input_bounds",
    "read_codes_jsonl",
    "relay_penalty",
    "split_cell",
    "verify_code",
    "verify_codes",
]
