"""Shared fixtures; the two expensive monodromy runs happen once per session."""

import pytest

from dessins import monodromy, parse_map_expr
from dessins.monodromy import TrackingConfig

FULL_CHAIN = "b(1,1).b(10,1).f.pi(2,7,11)"
PSI_CHAIN = "b(1,1).b(10,1)"


@pytest.fixture(scope="session")
def cfg():
    return TrackingConfig()


@pytest.fixture(scope="session")
def psi_pair(cfg):
    return monodromy(parse_map_expr(PSI_CHAIN), cfg)


@pytest.fixture(scope="session")
def full_pair(cfg):
    return monodromy(parse_map_expr(FULL_CHAIN), cfg)
