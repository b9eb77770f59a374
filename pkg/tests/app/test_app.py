from fastapi.middleware.gzip import GZipMiddleware

from relaylab.app.app import app


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy"}
    assert response.headers["Access-Control-Allow-Origin"] == "*"


def test_health_preflight(client):
    response = client.options("/health")
    assert response.status_code == 200
    assert "OPTIONS" in response.headers["Access-Control-Allow-Methods"]


def test_environment(client, monkeypatch):
    monkeypatch.setenv("ENV", "staging")
    assert client.get("/environment").json() == {"environment": "staging"}


def test_gzip_middleware_registered():
    """Sweep surfaces are large, so responses must be compressible."""
    assert GZipMiddleware in [m.cls for m in app.user_middleware]


def test_large_sweeps_are_compressed(client):
    response = client.get(
        "/gap/sweep", params={"snr_count": 5, "r0_count": 11}, headers={"Accept-Encoding": "gzip"}
    )
    assert response.status_code == 200
    assert response.headers["content-encoding"] == "gzip"
