from __future__ import annotations

import random

import pytest

from gentle_cm import fixture
from gentle_cm.corpus import random_gentle_presentation


@pytest.fixture(params=["A2", "C3", "HEX", "TWOCYC", "LOOP"])
def finite_fixture(request):
    return fixture(request.param)


def gentle_sample(seed: int, **kw):
    return random_gentle_presentation(random.Random(seed), **kw)
