import json
import logging

import pytest

from relaylab.corpus import GOLDEN_PATH, load_goldens
from relaylab.relay import verify_code
from relaylab.scripts import cli
from relaylab.scripts.cli import main

SIGN_LINE = '{"name": "sign", "codebook": [-1.0, 1.0], "thresholds": [0.0], "noise": 1.0}'
CONSTANT_LINE = '{"name": "constant", "codebook": [-1.0, 1.0], "noise": 1.0}'


@pytest.fixture(autouse=True)
def restore_logging():
    """``main`` reinstalls the root handlers; put pytest's back afterwards."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def _jsonl(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines()]


class TestUsage:
    def test_help(self, capsys):
        assert main(["--help"]) == 0
        assert "regenerate-goldens" in capsys.readouterr().out

    def test_missing_required_flag(self, capsys):
        assert main(["bounds", "--snr", "1"]) == 2
        err = capsys.readouterr().err
        assert err.startswith("relaylab: error:")
        assert len(err.splitlines()) == 1

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_invalid_seed(self, capsys):
        assert main(["concentration", "--seed", "-3"]) == 2
        assert "Invalid seed" in capsys.readouterr().err


class TestBounds:
    def test_table(self, capsys):
        assert main(["bounds", "--snr", "1", "--r0", "0.2"]) == 0
        out = capsys.readouterr().out
        assert "cutset_binding" in out
        assert "multiple-access" in out

    def test_json(self, capsys):
        assert main(["bounds", "--snr", "1e6", "--r0", "0.5", "--format", "json"]) == 0
        body = json.loads(capsys.readouterr().out)
        assert body["gap"] == pytest.approx(0.053517728821107037, rel=1e-12)
        assert body["snr"] == 1e6

    def test_asymmetric(self, capsys):
        assert main(["bounds", "--snr1", "1", "--snr2", "3", "--r0", "0.5", "--format", "json"]) == 0
        body = json.loads(capsys.readouterr().out)
        assert body["cutset_binding"] == "broadcast"
        assert "new_bound" not in body

    def test_csv_is_refused(self, capsys):
        assert main(["bounds", "--snr", "1", "--r0", "0.5", "--format", "csv"]) == 2
        assert "csv output is only available" in capsys.readouterr().err

    def test_no_snr(self, capsys):
        assert main(["bounds", "--r0", "0.5"]) == 2
        assert "--snr" in capsys.readouterr().err

    def test_negative_rate(self, capsys):
        assert main(["bounds", "--snr", "1", "--r0", "-1"]) == 2
        assert "r0" in capsys.readouterr().err


def test_astar_json(capsys):
    assert main(["astar", "--r0", "1", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["a_star"] == pytest.approx(0.16013159765449694, rel=1e-15)


class TestAStar:
    def test_positional_rate(self, capsys):
        assert main(["astar", "0.5"]) == 0
        assert "a_star  0.053518" in capsys.readouterr().out

    def test_flag_alias(self, capsys):
        assert main(["astar", "--r0", "0.5", "--format", "json"]) == 0
        body = json.loads(capsys.readouterr().out)
        assert body == {"r0": 0.5, "a_star": pytest.approx(0.053518089494596778, abs=1e-9)}

    def test_missing_rate(self, capsys):
        assert main(["astar"]) == 2
        assert "relay rate" in capsys.readouterr().err


def test_gap_table(capsys):
    assert main(["gap", "--snr", "1", "--r0", "0.29248125036057809"]) == 0
    assert "0.021553" in capsys.readouterr().out


def test_preconstant_defaults(capsys):
    assert main(["preconstant"]) == 0
    assert "preconstant  0.013379" in capsys.readouterr().out


def test_preconstant_rejects_zero_antennas(capsys):
    assert main(["preconstant", "--antennas", "0"]) == 2


class TestSweep:
    def test_single_cell_csv(self, capsys):
        args = ["sweep", "--snr-min", "1", "--snr-max", "1", "--snr-count", "1"]
        args += ["--r0-min", "0.2", "--r0-max", "0.2", "--r0-count", "1"]
        assert main(args) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "snr,r0,cutset,new_bound,gap"
        assert len(lines) == 2
        assert lines[1].startswith("1.0000000000000000e+00,2.0000000000000001e-01,")

    def test_output_file(self, capsys, tmp_path):
        out = tmp_path / "surface.csv"
        args = ["sweep", "--snr-max", "10", "--snr-count", "2", "--r0-count", "3", "--out", str(out)]
        assert main(args) == 0
        assert capsys.readouterr().out == ""
        assert len(out.read_text().splitlines()) == 7

    def test_identical_runs_are_byte_identical(self, capsys):
        args = ["sweep", "--snr-max", "10", "--snr-count", "3", "--r0-count", "5", "--format", "json"]
        main(args)
        first = capsys.readouterr().out
        main([*args, "--workers", "3"])
        assert capsys.readouterr().out == first

    def test_invalid_grid(self, capsys):
        assert main(["sweep", "--snr-min", "10", "--snr-max", "1"]) == 2

    def test_grid_file_replaces_the_axis_flags(self, capsys, tmp_path):
        grid = tmp_path / "grid.json"
        fields = {"snr_min": 1, "snr_max": 1, "snr_count": 1, "r0_min": 0.2, "r0_max": 0.2, "r0_count": 1}
        grid.write_text(json.dumps(fields))
        assert main(["sweep", "--grid", str(grid), "--snr-count", "9"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("1.0000000000000000e+00,2.0000000000000001e-01,")

    def test_invalid_grid_file(self, capsys, tmp_path):
        grid = tmp_path / "grid.json"
        grid.write_text(json.dumps({"snr_min": 10, "snr_max": 1}))
        assert main(["sweep", "--grid", str(grid)]) == 2

    def test_missing_grid_file(self, capsys, tmp_path):
        assert main(["sweep", "--grid", str(tmp_path / "absent.json")]) == 2


def test_maximize_json(capsys):
    args = ["maximize", "--snr-min", "1e6", "--snr-count", "1", "--r0-max", "1", "--r0-count", "21"]
    assert main([*args, "--format", "json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["gap"] == pytest.approx(0.0535180, abs=1e-6)
    assert body["grid_best"]["r0"] == pytest.approx(0.5)


def test_fixed_snr_json(capsys):
    assert main(["fixed-snr", "--snr", "1", "--format", "json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["gap"] == pytest.approx(0.021552794756027633, rel=1e-12)


class TestConcentration:
    @pytest.fixture
    def config(self, tmp_path):
        path = tmp_path / "suite.json"
        entries = [
            {"name": "edge", "experiment": "halfspace-exact", "dimension": 1, "a": 2.6560327974241065, "r": 1.0},
            {"name": "norm", "experiment": "noise-norm", "dimension": 6, "eps": 0.3, "trials": 10_000},
        ]
        path.write_text(json.dumps(entries))
        return path

    def test_jsonl_records(self, capsys, config):
        assert main(["concentration", str(config), "--seed", "11"]) == 0
        records = _jsonl(capsys.readouterr().out)
        assert [r["name"] for r in records] == ["edge", "norm"]
        assert all(r["passed"] for r in records)

    def test_seed_determinism(self, capsys, config):
        main(["concentration", str(config), "--seed", "11"])
        first = capsys.readouterr().out
        main(["concentration", str(config), "--seed", "11", "--workers", "2"])
        assert capsys.readouterr().out == first
        main(["concentration", str(config), "--seed", "12"])
        assert capsys.readouterr().out != first

    def test_trials_override(self, capsys, config):
        assert main(["concentration", str(config), "--trials", "20000"]) == 0
        assert _jsonl(capsys.readouterr().out)[1]["report"]["trials"] == 20_000

    def test_too_few_trials_becomes_an_error_record(self, capsys, config):
        assert main(["concentration", str(config), "--trials", "50"]) == 2
        records = _jsonl(capsys.readouterr().out)
        assert records[0]["error"] is None
        assert records[1]["error"].startswith("DomainError")

    def test_precondition_violation_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        entry = {
            "experiment": "exact",
            "descriptor": {"shape": "half-space", "dimension": 1, "offset": -3.0},
            "a": 1.0,
            "r": 0.5,
        }
        path.write_text(json.dumps([entry]))
        assert main(["concentration", str(path), "--format", "table"]) == 2
        assert "MeasureFloorError" in capsys.readouterr().out

    def test_missing_file(self, capsys, tmp_path):
        assert main(["concentration", str(tmp_path / "nope.json")]) == 2


class TestVerifyRelay:
    def test_jsonl(self, capsys, tmp_path):
        path = tmp_path / "codes.jsonl"
        path.write_text(f"{SIGN_LINE}\n{CONSTANT_LINE}\n")
        assert main(["verify-relay", str(path)]) == 0
        records = _jsonl(capsys.readouterr().out)
        assert [r["name"] for r in records] == ["sign", "constant"]
        assert records[0]["report"]["slack"] == pytest.approx(1.8096925665331387, abs=1e-7)

    def test_table(self, capsys, tmp_path):
        path = tmp_path / "codes.jsonl"
        path.write_text(SIGN_LINE + "\n")
        assert main(["verify-relay", str(path), "--format", "table"]) == 0
        assert "chain_slack" in capsys.readouterr().out

    def test_malformed_line(self, capsys, tmp_path):
        path = tmp_path / "codes.jsonl"
        path.write_text(f"{SIGN_LINE}\n{{\"codebook\": []}}\n")
        assert main(["verify-relay", str(path)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_failed_verification_exits_1(self, capsys, tmp_path, monkeypatch, relay_code_factory):
        failing = verify_code(relay_code_factory.make()).model_copy(update={"passed": False})
        monkeypatch.setattr(cli, "verify_codes", lambda codes, workers: iter([failing]))
        path = tmp_path / "codes.jsonl"
        path.write_text(SIGN_LINE + "\n")
        assert main(["verify-relay", str(path)]) == 1


def test_input_bounds(capsys, tmp_path):
    path = tmp_path / "codes.jsonl"
    path.write_text(SIGN_LINE + "\n")
    assert main(["input-bounds", str(path), "--r0", "1"]) == 0
    (record,) = _jsonl(capsys.readouterr().out)
    assert record["name"] == "sign"
    assert record["cutset"] == pytest.approx(0.72145159079028698, abs=1e-7)


class TestRegenerateGoldens:
    def test_check_shipped_corpus(self, capsys):
        assert main(["regenerate-goldens", "--check"]) == 0
        out = capsys.readouterr().out
        assert out.startswith(f"checked {len(load_goldens().records)} goldens in")

    def test_drift_exits_1(self, capsys, tmp_path):
        path = tmp_path / "goldens.json"
        text = GOLDEN_PATH.read_text().replace("0.16013159765449694", "0.16013")
        path.write_text(text)
        assert main(["regenerate-goldens", "--check", "--corpus", str(path)]) == 1
        assert "a-star-unit-rate" in capsys.readouterr().err
