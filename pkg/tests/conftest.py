import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

# deterministic thread usage for byte-identical CLI output checks
os.environ.setdefault("ADT_DESIGNER_MAX_WORKERS", "1")


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
