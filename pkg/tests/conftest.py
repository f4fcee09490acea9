from __future__ import annotations

import pytest

from virtbetti.fixtures import builtin_scene
from virtbetti.models import surface_model
from virtbetti.spectral import MVSpectralSequence


@pytest.fixture(scope="session")
def scene():
    return builtin_scene()


@pytest.fixture(scope="session")
def surface():
    return surface_model()


@pytest.fixture(scope="session")
def surface_ss(scene):
    return MVSpectralSequence(scene.arrangement("surface-443"))
