from typing import Generator

import pytest

from poroshock.core.config import configure_settings, get_settings
from poroshock.models.flux import FluxSpec
from poroshock.models.profile import ShockProfile
from poroshock.profile import solve_profile

settings = get_settings()


@pytest.fixture(autouse=True)
def lab_settings() -> Generator:
    """Every test starts from the default settings and may swap in its own."""
    configure_settings(settings)
    yield settings
    configure_settings(settings)


@pytest.fixture(scope="session")
def burgers() -> FluxSpec:
    return FluxSpec.burgers()


@pytest.fixture(scope="session")
def profile(burgers: FluxSpec) -> ShockProfile:
    return solve_profile(burgers, 1.0, 1.25)


@pytest.fixture(scope="session")
def oracle_profile() -> ShockProfile:
    return solve_profile(FluxSpec.quadratic(1.0), 1.0, 1.0)
