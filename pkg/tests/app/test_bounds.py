import math

import pytest

from relaylab.bounds import solve_a_star


class TestGetBounds:
    def test_symmetric(self, client):
        response = client.get("/bounds", params={"snr": 1.0, "r0": 0.2})
        assert response.status_code == 200
        body = response.json()
        assert body["cutset"] == pytest.approx(0.7)
        assert body["cutset_binding"] == "multiple-access"
        assert body["gap"] == pytest.approx(body["a_star"])
        assert body["a_star"] == pytest.approx(solve_a_star(0.2))

    def test_asymmetric_reports_the_cutset_only(self, client):
        response = client.get("/bounds", params={"snr1": 1.0, "snr2": 3.0, "r0": 0.5})
        assert response.status_code == 200
        body = response.json()
        assert body == {
            "r0": 0.5,
            "cutset": pytest.approx(0.5 * math.log2(5.0)),
            "cutset_binding": "broadcast",
        }

    def test_half_an_asymmetric_channel(self, client):
        response = client.get("/bounds", params={"snr1": 1.0, "r0": 0.5})
        assert response.status_code == 422

    def test_missing_snr(self, client):
        response = client.get("/bounds", params={"r0": 0.5})
        assert response.status_code == 422
        assert "snr" in response.json()["detail"]

    def test_negative_rate(self, client):
        assert client.get("/bounds", params={"snr": 1.0, "r0": -1.0}).status_code == 422


def test_a_star(client):
    body = client.get("/bounds/astar", params={"r0": 1.0}).json()
    assert body["a_star"] == pytest.approx(0.16013159765449694, rel=1e-14)


class TestPreconstant:
    def test_defaults(self, client):
        body = client.get("/bounds/preconstant").json()
        assert body == {"delta": 0.053517, "antennas": 4, "preconstant": pytest.approx(0.01337925)}

    def test_zero_antennas(self, client):
        response = client.get("/bounds/preconstant", params={"antennas": 0})
        assert response.status_code == 422
