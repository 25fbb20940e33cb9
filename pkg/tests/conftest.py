"""Shared fixtures: cached profile integrations to keep the suite fast."""

from functools import lru_cache

import pytest

from lorentzdrops import CapillaryParams, integrate_ivp


@lru_cache(maxsize=None)
def cached_profile(kappa: float, u0: float, r_max: float):
    return integrate_ivp(CapillaryParams(kappa), u0, r_max)


@pytest.fixture(scope="session")
def profile():
    """Factory for (kappa, u0, r_max) profiles, memoized across the session."""
    return cached_profile


@pytest.fixture(scope="session")
def sessile_unit(profile):
    """The reference sessile drop kappa=1, u0=1 out to r=4."""
    return profile(1.0, 1.0, 4.0)


@pytest.fixture(scope="session")
def pendent_ref(profile):
    """The reference pendent drop kappa=-2, u0=-1 over the feature window."""
    return profile(-2.0, -1.0, 25.0 / 2.0**0.5)
