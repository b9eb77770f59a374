import pytest

from ._factories import (
    ChannelParamsFactory,
    SetDescriptorFactory,
    ToyRelayCodeFactory,
)

# Seed every test sees through RELAYLAB_SEED.
TEST_SEED = 20150601


@pytest.fixture(autouse=True)
def pin_run_settings(monkeypatch):
    """Pin the seed and the worker count so the environment never changes results.

    A developer's shell may export RELAYLAB_SEED or RELAYLAB_WORKERS; tests that
    care about either set them explicitly.
    """
    monkeypatch.setenv("RELAYLAB_SEED", str(TEST_SEED))
    monkeypatch.delenv("RELAYLAB_WORKERS", raising=False)
    yield


@pytest.fixture(scope="session")
def channel_factory() -> ChannelParamsFactory:
    return ChannelParamsFactory()


@pytest.fixture(scope="session")
def relay_code_factory() -> ToyRelayCodeFactory:
    return ToyRelayCodeFactory()


@pytest.fixture(scope="session")
def set_factory() -> SetDescriptorFactory:
    return SetDescriptorFactory()
