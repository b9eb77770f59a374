"""Command-line entry point (``relaylab``).

Every computation in the package is reachable from here. Machine formats are
byte-identical for identical flags and seed, and logs go to stderr so stdout
stays parseable.

Exit codes: 0 on success or when every verdict passes, 1 when a verified
inequality (or a golden, or a numerical cross-check) fails, 2 on usage or
input errors.

Usage:
    uv run relaylab astar 0.5
    uv run relaylab bounds --snr 1e6 --r0 0.5
    uv run relaylab sweep --snr-max 1e6 --format csv --out surface.csv
    uv run relaylab concentration suite.json --seed 7 --workers 4
    uv run relaylab verify-relay codes.jsonl
    uv run relaylab regenerate-goldens --check
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

from pydantic import ValidationError

from relaylab.bounds import (
    bound_report,
    cutset_bound,
    gap,
    network_gap_preconstant,
    solve_a_star,
)
from relaylab.concentration import parse_experiments, run_batch
from relaylab.config import (
    configure_logging,
    default_seed,
    default_workers,
    load_dotenv_for_current_env,
    parse_seed,
)
from relaylab.corpus import (
    GOLDEN_PATH,
    CONCENTRATION_SUITE_PATH,
    GoldenDriftError,
    load_regression_codes,
    load_relay_family,
    regenerate_goldens,
)
from relaylab.models import ChannelParams, OutputFormat, SweepSpec, ToyRelayCode
from relaylab.optimize import (
    SURFACE_CSV_COLUMNS,
    fixed_snr_maximizer,
    maximize_gap,
    surface_to_csv,
    surface_to_json,
    sweep,
)
from relaylab.relay import input_bounds, read_codes_jsonl, verify_codes
from relaylab.utils.formatting import (
    render_fields,
    render_json,
    render_jsonl,
    render_table,
)

logger = logging.getLogger(__name__)

PROG = "relaylab"
# Entries whose sample count ``--trials`` overrides.
TRIAL_EXPERIMENTS = ("monte-carlo", "noise-norm")
CONCENTRATION_TABLE_COLUMNS = ["index", "name", "experiment", "passed", "error"]
RELAY_TABLE_COLUMNS = ["name", "slack", "chain_slack", "passed"]
INPUT_BOUNDS_COLUMNS = ["name", "r0", "cutset", "new_bound", "a_star", "gap"]


class _Parser(argparse.ArgumentParser):
    """Usage errors print a single diagnostic line and exit 2."""

    def error(self, message: str) -> NoReturn:
        self.exit(2, f"{PROG}: error: {message}\n")


def _one_line(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        return "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'input'}: {err['msg']}"
            for err in exc.errors()
        )
    return str(exc).replace("\n", " ")


def _seed_arg(raw: str) -> int:
    try:
        return parse_seed(raw)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{raw!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _output_format(args: argparse.Namespace) -> OutputFormat:
    return OutputFormat(tag=args.format, destination=args.out)


def _emit(fmt: OutputFormat, text: str) -> None:
    if fmt.destination is None:
        sys.stdout.write(text)
    else:
        fmt.destination.write_text(text)
        logger.info("wrote %s", fmt.destination)


def _emit_record(fmt: OutputFormat, fields: dict[str, Any], what: str) -> None:
    fmt.require_rows(row_shaped=False, what=what)
    _emit(fmt, render_json(fields) if fmt.tag == "json" else render_fields(fields))


def _workers(args: argparse.Namespace) -> int:
    return default_workers() if args.workers is None else args.workers


def _seed(args: argparse.Namespace) -> int:
    return default_seed() if args.seed is None else args.seed


def _sweep_spec(args: argparse.Namespace) -> SweepSpec:
    if args.grid is not None:
        return SweepSpec.model_validate_json(args.grid.read_text())
    return SweepSpec(
        snr_min=args.snr_min,
        snr_max=args.snr_max,
        snr_count=args.snr_count,
        r0_min=args.r0_min,
        r0_max=args.r0_max,
        r0_count=args.r0_count,
        tolerance=args.tolerance,
    )


def _cmd_bounds(args: argparse.Namespace) -> int:
    fmt = _output_format(args)
    if args.snr1 is not None or args.snr2 is not None:
        params = ChannelParams(r0=args.r0, snr1=args.snr1, snr2=args.snr2)
        cutset, binding = cutset_bound(params)
        fields: dict[str, Any] = {
            "snr1": params.snr1,
            "snr2": params.snr2,
            "r0": params.r0,
            "cutset": cutset,
            "cutset_binding": binding,
        }
        _emit_record(fmt, fields, "bounds")
        return 0
    if args.snr is None:
        raise ValueError("--snr is required unless --snr1 and --snr2 are given")
    report = bound_report(ChannelParams.symmetric(args.snr, args.r0))
    _emit_record(fmt, {"snr": args.snr, **report.model_dump()}, "bounds")
    return 0


def _cmd_astar(args: argparse.Namespace) -> int:
    r0 = args.r0 if args.r0 is not None else args.r0_flag
    if r0 is None:
        raise ValueError("astar needs a relay rate: relaylab astar R0")
    _emit_record(_output_format(args), {"r0": r0, "a_star": solve_a_star(r0)}, "astar")
    return 0


def _cmd_gap(args: argparse.Namespace) -> int:
    value = gap(ChannelParams.symmetric(args.snr, args.r0))
    _emit_record(_output_format(args), {"snr": args.snr, "r0": args.r0, "gap": value}, "gap")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    fmt = _output_format(args)
    surface = sweep(_sweep_spec(args), _workers(args))
    if fmt.tag == "csv":
        text = surface_to_csv(surface)
    elif fmt.tag == "json":
        text = surface_to_json(surface)
    else:
        text = render_table(SURFACE_CSV_COLUMNS, (row.model_dump() for row in surface.rows))
    _emit(fmt, text)
    return 0


def _cmd_maximize(args: argparse.Namespace) -> int:
    fmt = _output_format(args)
    fmt.require_rows(row_shaped=False, what="maximize")
    record = maximize_gap(_sweep_spec(args), _workers(args))
    if fmt.tag == "json":
        _emit(fmt, render_json(record))
        return 0
    fields: dict[str, Any] = {
        "snr": record.snr,
        "r0": record.r0,
        "gap": record.gap,
        "grid_r0": record.grid_best.r0,
        "grid_gap": record.grid_best.gap,
        "sup_gap": record.asymptote.sup_gap,
        "error_estimate": record.asymptote.error_estimate,
    }
    _emit(fmt, render_fields(fields))
    return 0


def _cmd_fixed_snr(args: argparse.Namespace) -> int:
    fmt = _output_format(args)
    fmt.require_rows(row_shaped=False, what="fixed-snr")
    result = fixed_snr_maximizer(args.snr)
    _emit(fmt, render_json(result) if fmt.tag == "json" else render_fields(result.model_dump()))
    return 0


def _cmd_preconstant(args: argparse.Namespace) -> int:
    value = network_gap_preconstant(args.delta, args.antennas)
    _emit_record(
        _output_format(args),
        {"delta": args.delta, "antennas": args.antennas, "preconstant": value},
        "preconstant",
    )
    return 0


def _cmd_concentration(args: argparse.Namespace) -> int:
    fmt = _output_format(args)
    path: Path = args.config if args.config is not None else CONCENTRATION_SUITE_PATH
    entries = parse_experiments(path.read_bytes())
    if args.trials is not None:
        entries = [
            {**entry, "trials": args.trials}
            if entry.get("experiment") in TRIAL_EXPERIMENTS
            else entry
            for entry in entries
        ]
    records = list(run_batch(entries, _seed(args), _workers(args)))
    if fmt.tag == "json":
        _emit(fmt, render_jsonl(records))
    else:
        rows = [record.model_dump() for record in records]
        _emit(fmt, render_table(CONCENTRATION_TABLE_COLUMNS, rows))
    if any(record.error is not None for record in records):
        return 2
    failed = [record for record in records if not record.passed]
    for record in failed:
        logger.warning("experiment %d (%s) failed its verdict", record.index, record.experiment)
    return 1 if failed else 0


def _read_codes(path: Path | None) -> list[ToyRelayCode]:
    if path is None:
        return load_relay_family() + load_regression_codes()
    with path.open() as lines:
        return read_codes_jsonl(lines)


def _cmd_verify_relay(args: argparse.Namespace) -> int:
    fmt = _output_format(args)
    codes = _read_codes(args.codes)
    verifications = list(verify_codes(codes, workers=_workers(args)))
    if fmt.tag == "json":
        _emit(fmt, render_jsonl(verifications))
    else:
        rows = [
            {
                "name": v.name,
                "slack": v.entropy_bound.slack,
                "chain_slack": v.rate_chain.chain_slack,
                "passed": v.passed,
            }
            for v in verifications
        ]
        _emit(fmt, render_table(RELAY_TABLE_COLUMNS, rows))
    failed = [v for v in verifications if not v.passed]
    for v in failed:
        logger.warning("relay code %s failed verification", v.name)
    return 1 if failed else 0


def _cmd_input_bounds(args: argparse.Namespace) -> int:
    fmt = _output_format(args)
    codes = _read_codes(args.codes) if args.codes is not None else load_regression_codes()
    rows = [
        {"name": code.name, **input_bounds(code, args.r0).model_dump()} for code in codes
    ]
    _emit(fmt, render_jsonl(rows) if fmt.tag == "json" else render_table(INPUT_BOUNDS_COLUMNS, rows))
    return 0


def _cmd_regenerate_goldens(args: argparse.Namespace) -> int:
    try:
        goldens = regenerate_goldens(args.corpus, check=args.check)
    except GoldenDriftError as exc:
        for diff in exc.diffs:
            print(diff, file=sys.stderr)
        return 1
    verb = "checked" if args.check else "regenerated"
    print(f"{verb} {len(goldens.records)} goldens in {args.corpus}")
    return 0


def _add_output(
    parser: argparse.ArgumentParser,
    choices: Sequence[str] = ("table", "json"),
    default: str = "table",
) -> None:
    parser.add_argument("--format", choices=list(choices), default=default)
    parser.add_argument("--out", type=Path, help="write to PATH instead of stdout")


def _add_workers(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--workers", type=_positive_int, help="worker threads (default: RELAYLAB_WORKERS or 1)"
    )


def _add_grid(parser: argparse.ArgumentParser) -> None:
    defaults = SweepSpec()
    parser.add_argument("--snr-min", type=float, default=defaults.snr_min)
    parser.add_argument("--snr-max", type=float, default=defaults.snr_max)
    parser.add_argument("--snr-count", type=_positive_int, default=defaults.snr_count)
    parser.add_argument("--r0-min", type=float, default=defaults.r0_min)
    parser.add_argument("--r0-max", type=float, default=defaults.r0_max)
    parser.add_argument("--r0-count", type=_positive_int, default=defaults.r0_count)
    parser.add_argument("--tolerance", type=float, default=defaults.tolerance)
    parser.add_argument(
        "--grid", type=Path, help="JSON grid spec; replaces the --snr-* and --r0-* flags"
    )
    _add_workers(parser)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_bounds = sub.add_parser("bounds", help="cut-set bound, new bound, a* and gap")
    p_bounds.add_argument("--snr", type=float, help="P/N of the symmetric channel")
    p_bounds.add_argument("--snr1", type=float, help="P/N1 (asymmetric, cut-set only)")
    p_bounds.add_argument("--snr2", type=float, help="P/N2 (asymmetric, cut-set only)")
    p_bounds.add_argument("--r0", type=float, required=True, help="relay link rate")
    _add_output(p_bounds, choices=("table", "json", "csv"))
    p_bounds.set_defaults(func=_cmd_bounds)

    p_astar = sub.add_parser("astar", help="solve the crossing equation for a*")
    p_astar.add_argument("r0", nargs="?", type=float, help="relay link rate")
    p_astar.add_argument("--r0", dest="r0_flag", type=float, help="same as the positional R0")
    _add_output(p_astar)
    p_astar.set_defaults(func=_cmd_astar)

    p_gap = sub.add_parser("gap", help="cut-set minus new bound at one point")
    p_gap.add_argument("--snr", type=float, required=True)
    p_gap.add_argument("--r0", type=float, required=True)
    _add_output(p_gap)
    p_gap.set_defaults(func=_cmd_gap)

    p_sweep = sub.add_parser("sweep", help="gap over an snr x r0 grid")
    _add_grid(p_sweep)
    _add_output(p_sweep, choices=("table", "json", "csv"), default="csv")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_max = sub.add_parser("maximize", help="refined maximizer of the gap over a grid")
    _add_grid(p_max)
    _add_output(p_max, choices=("table", "json", "csv"))
    p_max.set_defaults(func=_cmd_maximize)

    p_fixed = sub.add_parser("fixed-snr", help="best relay rate at one snr")
    p_fixed.add_argument("--snr", type=float, required=True)
    _add_output(p_fixed, choices=("table", "json", "csv"))
    p_fixed.set_defaults(func=_cmd_fixed_snr)

    p_pre = sub.add_parser("preconstant", help="per-node network gap coefficient")
    p_pre.add_argument("--delta", type=float, default=0.053517)
    p_pre.add_argument("--antennas", type=int, default=4)
    _add_output(p_pre)
    p_pre.set_defaults(func=_cmd_preconstant)

    p_conc = sub.add_parser("concentration", help="run a batch of blow-up experiments")
    p_conc.add_argument(
        "config", nargs="?", type=Path, help="JSON array of experiments (default: bundled suite)"
    )
    p_conc.add_argument("--seed", type=_seed_arg, help="default: RELAYLAB_SEED")
    p_conc.add_argument("--trials", type=_positive_int, help="override Monte Carlo trials")
    _add_workers(p_conc)
    _add_output(p_conc, default="json")
    p_conc.set_defaults(func=_cmd_concentration)

    p_relay = sub.add_parser("verify-relay", help="check the entropy bound for toy relay codes")
    p_relay.add_argument(
        "codes", nargs="?", type=Path, help="JSON-lines codes (default: bundled corpus)"
    )
    _add_workers(p_relay)
    _add_output(p_relay, default="json")
    p_relay.set_defaults(func=_cmd_verify_relay)

    p_input = sub.add_parser("input-bounds", help="bounds at a toy code's own input law")
    p_input.add_argument(
        "codes", nargs="?", type=Path, help="JSON-lines codes (default: bundled regression codes)"
    )
    p_input.add_argument("--r0", type=float, required=True)
    _add_output(p_input, default="json")
    p_input.set_defaults(func=_cmd_input_bounds)

    p_gold = sub.add_parser("regenerate-goldens", help="recompute goldens from the oracles")
    p_gold.add_argument("--corpus", type=Path, default=GOLDEN_PATH)
    p_gold.add_argument("--check", action="store_true", help="compare without writing")
    p_gold.set_defaults(func=_cmd_regenerate_goldens)

    return parser


def main(argv: list[str] | None = None) -> int:
    load_dotenv_for_current_env()
    configure_logging(stdout_for_info=False)
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits on usage errors and --help
        return exc.code if isinstance(exc.code, int) else 0
    try:
        return args.func(args)
    except (ValidationError, ValueError, OSError) as exc:
        print(f"{PROG}: error: {_one_line(exc)}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        logger.error("numerical failure: %s", exc)
        print(f"{PROG}: error: {_one_line(exc)}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
