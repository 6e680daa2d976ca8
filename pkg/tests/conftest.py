import random

import pytest

from rootposets.rootsystem import admissible_systems, root_system

SMALL_IDS = [str(sid) for sid in admissible_systems(4)]


@pytest.fixture(params=SMALL_IDS, ids=SMALL_IDS)
def small_system(request):
    """Every admissible system of rank at most 4 (includes F4 and G2)."""
    return root_system(request.param)


@pytest.fixture
def rng():
    return random.Random(20040817)
