import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from symilp.instances import HtcParams, gen_hypertruncated_cube
from symilp.model import normalize

from corpus import build_corpus


@pytest.fixture(scope="session")
def ex61():
    """The 3x3 cyclic instance: x1+2x2 <= 3, x2+2x3 <= 3, 2x1+x3 <= 3."""
    return normalize(
        [(1, 2, 0, 3), (0, 1, 2, 3), (2, 0, 1, 3)], [1, 1, 1], name="ex61"
    )


@pytest.fixture(scope="session")
def htc6():
    return gen_hypertruncated_cube(HtcParams(6, 2, Fraction(1, 2)))


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
