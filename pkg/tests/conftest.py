"""Shared fixtures for the test suite.

The heavy desk-scale configuration (n=10, lambda=10) is the workhorse of
most tests; build it once per session.
"""

import pytest

from vigilance_games import GameConfig


@pytest.fixture(scope="session")
def cfg10():
    """Single greedy vs single vigilante, n=10, lambda=10, rho=0.001."""
    return GameConfig(n=10, lam=(10.0,), rho=(0.001,))


@pytest.fixture(scope="session")
def cfg10_stiff():
    """Same channel but a stiffer vigilante penalty, rho=0.01."""
    return GameConfig(n=10, lam=(10.0,), rho=(0.01,))
