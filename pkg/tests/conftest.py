import pytest
from faker import Faker
from pytest_factoryboy import register

from src.core.config import get_settings
from src.core.logging import configure_logging
from tests.factories import FreyCurveFactory, TernFactory

register(TernFactory)
register(FreyCurveFactory)


@pytest.fixture(autouse=True, scope="session")
def quiet_logging():
    configure_logging("warning")


@pytest.fixture(autouse=True)
def settings(monkeypatch):
    """Fresh settings per test, read from a patched environment."""
    monkeypatch.setenv("LOG_LEVEL", "warning")
    monkeypatch.setenv("TRIPWIRE_ENABLED", "false")
    monkeypatch.setenv("WORKERS", "1")
    get_settings.cache_clear()
    yield get_settings()
    get_settings.cache_clear()


@pytest.fixture
def override_settings(monkeypatch):
    def _override(**values):
        for key, value in values.items():
            monkeypatch.setenv(key, str(value))
        get_settings.cache_clear()
        return get_settings()

    return _override


@pytest.fixture
def fake():
    Faker.seed(1707)
    return Faker()
