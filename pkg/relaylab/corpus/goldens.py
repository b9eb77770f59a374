"""Golden values: recompute them from the oracles and check the implementation.

DERIVED and TRIVIAL goldens take their expected values from ``oracles``.
PUBLISHED goldens keep their published value; both the oracle and the
implementation must stay within its tolerance.
"""

import hashlib
import json
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any

from relaylab.bounds import gap, network_gap_preconstant, solve_a_star
from relaylab.concentration import halfspace_blowup_exact
from relaylab.models import ChannelParams, GoldenFile, GoldenRecord, ToyRelayCode
from relaylab.numerics import chi_cdf, entropy_of_gaussian_mixture, std_normal_cdf
from relaylab.optimize import fixed_snr_maximizer
from relaylab.relay import entropy_quantities
from relaylab.utils.formatting import render_json

from . import oracles

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_PATH = DATA_DIR / "goldens.json"

Evaluator = Callable[[dict[str, Any]], dict[str, float]]


class GoldenDriftError(AssertionError):
    """An oracle, the implementation or a stored value moved outside its tolerance."""

    def __init__(self, diffs: list[str]):
        self.diffs = diffs
        super().__init__("Golden drift:\n" + "\n".join(diffs))


def _toy_code_fields(values: dict[str, float]) -> dict[str, float]:
    return {k: values[k] for k in ("a", "b", "c", "h_y_given_i", "slack")}


ORACLES: dict[str, Evaluator] = {
    "normal_cdf": lambda i: {"value": oracles.normal_cdf(i["x"])},
    "chi_cdf": lambda i: {"value": oracles.chi_cdf(i["x"], i["n"])},
    "a_star": lambda i: {"a_star": oracles.a_star(i["r0"])},
    "gap": lambda i: {"gap": oracles.gap(i["snr"], i["r0"])},
    "preconstant": lambda i: {"preconstant": i["delta"] / i["antennas"]},
    "fixed_snr": lambda i: {
        "r0": oracles.capacity_excess(i["snr"]),
        "gap": oracles.a_star(oracles.capacity_excess(i["snr"])),
    },
    "mixture_entropy": lambda i: {
        "entropy": oracles.mixture_entropy(i["weights"], i["means"], i["variance"])
    },
    "toy_code": lambda i: oracles.toy_code_quantities(
        i["codebook"], i["thresholds"], i["noise"]
    ),
    "halfspace_blowup": lambda i: {
        "measured": oracles.halfspace_blowup(i["n"], i["a"], i["r"], i["noise"])
    },
}

IMPLEMENTATIONS: dict[str, Evaluator] = {
    "normal_cdf": lambda i: {"value": std_normal_cdf(i["x"])},
    "chi_cdf": lambda i: {"value": chi_cdf(i["x"], i["n"])},
    "a_star": lambda i: {"a_star": solve_a_star(i["r0"])},
    "gap": lambda i: {"gap": gap(ChannelParams.symmetric(i["snr"], i["r0"]))},
    "preconstant": lambda i: {
        "preconstant": network_gap_preconstant(i["delta"], i["antennas"])
    },
    "fixed_snr": lambda i: fixed_snr_maximizer(i["snr"]).model_dump(include={"r0", "gap"}),
    "mixture_entropy": lambda i: {
        "entropy": entropy_of_gaussian_mixture(i["weights"], i["means"], i["variance"])
    },
    "toy_code": lambda i: _toy_code_fields(
        entropy_quantities(ToyRelayCode.model_validate(i)).model_dump()
    ),
    "halfspace_blowup": lambda i: {
        "measured": halfspace_blowup_exact(i["n"], i["a"], i["r"], i["noise"]).measured
    },
}


def input_digest(kind: str, inputs: dict[str, Any]) -> str:
    """sha256 of the canonical JSON of (kind, inputs)."""
    canonical = json.dumps(
        {"inputs": inputs, "kind": kind}, sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(canonical.encode()).hexdigest()


def _compare(
    record: GoldenRecord,
    label: str,
    reference: dict[str, float],
    values: dict[str, float],
) -> list[str]:
    diffs = []
    for key, want in reference.items():
        got = values[key]
        if abs(got - want) > record.tolerance:
            diffs.append(
                f"{record.name}.{key}: {label} {got!r} vs {want!r} "
                f"(|diff| {abs(got - want):.3e} > {record.tolerance:.1e})"
            )
    return diffs


def check_record(record: GoldenRecord, stored_check: bool = True) -> tuple[GoldenRecord, list[str]]:
    """The regenerated record and every disagreement found on the way."""
    if record.kind not in ORACLES:
        return record, [f"{record.name}: unknown kind {record.kind!r}"]
    digest = input_digest(record.kind, record.inputs)
    diffs = []
    if record.digest and record.digest != digest:
        diffs.append(f"{record.name}: input digest {record.digest} != {digest}")
    oracle = ORACLES[record.kind](record.inputs)
    implementation = IMPLEMENTATIONS[record.kind](record.inputs)
    if record.provenance == "PUBLISHED":
        diffs += _compare(record, "oracle", record.expected, oracle)
        diffs += _compare(record, "implementation", record.expected, implementation)
        expected = record.expected
    else:
        diffs += _compare(record, "implementation", oracle, implementation)
        if stored_check:
            diffs += _compare(record, "stored", oracle, record.expected)
        expected = {k: oracle[k] for k in record.expected} if record.expected else oracle
    return record.model_copy(update={"expected": expected, "digest": digest}), diffs


def load_goldens(path: Path = GOLDEN_PATH) -> GoldenFile:
    return GoldenFile.model_validate_json(path.read_text())


def regenerate_goldens(path: Path = GOLDEN_PATH, check: bool = False) -> GoldenFile:
    """Recompute every golden in ``path``; rewrite the file unless ``check``.

    In check mode the stored DERIVED and TRIVIAL values must also agree with
    the oracles.

    Raises:
        FileNotFoundError: If ``path`` does not exist.
        GoldenDriftError: On any disagreement beyond a record's tolerance.
    """
    goldens = load_goldens(path)
    regenerated = []
    diffs = []
    for record in goldens.records:
        new_record, record_diffs = check_record(record, stored_check=check)
        regenerated.append(new_record)
        diffs += record_diffs
    if diffs:
        for diff in diffs:
            logger.error("golden drift: %s", diff)
        raise GoldenDriftError(diffs)
    result = GoldenFile(records=regenerated)
    if not check:
        path.write_text(render_json(result))
        logger.info("rewrote %d goldens in %s", len(regenerated), path)
    return result
