import random
from fractions import Fraction
from pathlib import Path

import pytest

from nilblocks.curvezeta import CurveZeta

CURVE_DIR = Path(__file__).resolve().parent.parent / "curves"


@pytest.fixture(scope="session")
def p1_q2():
    return CurveZeta.from_numerator(2, 0, [1])


@pytest.fixture(scope="session")
def p1_q3():
    return CurveZeta.from_numerator(3, 0, [1])


@pytest.fixture(scope="session")
def elliptic_q2():
    # trace 0 over F_2: 3 rational points
    return CurveZeta.from_point_counts(2, 1, [3])


@pytest.fixture(scope="session")
def sample_curves(p1_q2, p1_q3, elliptic_q2):
    return {"p1_q2": p1_q2, "p1_q3": p1_q3, "elliptic_q2": elliptic_q2}


@pytest.fixture(scope="session")
def curve_dir():
    return CURVE_DIR


@pytest.fixture
def rng():
    return random.Random(20240611)


def frac(s):
    return Fraction(s)
