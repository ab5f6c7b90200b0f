import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gwasym.recursions import p2_genus0, p2_genus1, p3_genus0
from gwasym.singularity import build_profile

TIMINGS = {}


@pytest.fixture(scope="session")
def p2g0_400():
    t0 = time.monotonic()
    table = p2_genus0(400)
    TIMINGS["p2g0_400"] = time.monotonic() - t0
    return table


@pytest.fixture(scope="session")
def p2g1_400(p2g0_400):
    t0 = time.monotonic()
    table = p2_genus1(400, p2g0_400)
    TIMINGS["p2g1_400"] = time.monotonic() - t0
    return table


@pytest.fixture(scope="session")
def p3_40():
    t0 = time.monotonic()
    table = p3_genus0(40)
    TIMINGS["p3_40"] = time.monotonic() - t0
    return table


@pytest.fixture(scope="session")
def profile(p2g0_400):
    return build_profile(p2g0_400)
