import pytest
from fastapi.testclient import TestClient

from relaylab.app.app import app


@pytest.fixture
def client() -> TestClient:
    return TestClient(app)
