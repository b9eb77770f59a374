import pytest
from pydantic import ValidationError

from relaylab.models import ToyRelayCode


class TestToyRelayCode:
    def test_cells_and_edges(self, relay_code_factory):
        code = relay_code_factory.make({"thresholds": [-1.0, 1.0]})
        assert code.cells == 3
        assert code.edges.tolist() == [float("-inf"), -1.0, 1.0, float("inf")]

    def test_no_thresholds_is_one_cell(self, relay_code_factory):
        assert relay_code_factory.make({"thresholds": []}).cells == 1

    def test_repeated_codewords_merge(self, relay_code_factory):
        symbols, prior = relay_code_factory.make({"codebook": [1.0, -1.0, 1.0, 1.0]}).symbol_distribution()
        assert symbols.tolist() == [-1.0, 1.0]
        assert prior.tolist() == [0.25, 0.75]

    def test_power_limit(self, relay_code_factory):
        assert relay_code_factory.make({"codebook": [-2.0, 2.0], "power": 4.0}).mean_square == 4.0
        with pytest.raises(ValidationError):
            relay_code_factory.make({"codebook": [-2.0, 2.0], "power": 3.9})

    @pytest.mark.parametrize(
        "update",
        [
            {"codebook": []},
            {"thresholds": [1.0, 1.0]},
            {"thresholds": [1.0, 0.0]},
            {"noise": 0.0},
            {"codebook": [float("nan")]},
            {"thresholds": [float("inf")]},
        ],
    )
    def test_invalid_codes(self, relay_code_factory, update):
        with pytest.raises(ValidationError):
            relay_code_factory.make(update)
