import random
from fractions import Fraction

import pytest

from phaseless import Instance, UPoly


def F(a, b=1):
    return Fraction(a, b)


@pytest.fixture
def k1_instance():
    """Cubic reconstruction from 6 points (freedom 1); unique solution
    x^3 + x^2 - 4x - 2."""
    return Instance(n=3, points=((-3, 8), (-2, 2), (-1, 2), (0, 2), (1, 4), (2, 2)))


@pytest.fixture
def k2_instance():
    """Same constraints minus the node at -3 (freedom 2)."""
    return Instance(n=3, points=((-2, 2), (-1, 2), (0, 2), (1, 4), (2, 2)))


@pytest.fixture
def k3_instance():
    """Quartic |x^4 + x^3 - 10x^2 - 4x + 9| sampled at -2..3 (freedom 3);
    four solutions."""
    return Instance(n=4, points=((-2, 15), (-1, 3), (0, 9), (1, 3), (2, 15), (3, 15)))


CUBIC_SOLUTION = UPoly([-2, -4, 1, 1])

K3_SOLUTIONS = [
    UPoly([9, -4, -10, 1, 1]),
    UPoly([9, F(5, 2), F(-29, 4), F(-5, 2), F(5, 4)]),
    UPoly([9, 4, -10, -1, 1]),
    UPoly([9, F(13, 2), F(-45, 4), F(-7, 2), F(9, 4)]),
]


def random_upoly(rng: random.Random, degree: int, lo=-9, hi=9) -> UPoly:
    """Random polynomial of degree exactly `degree` with small integer
    coefficients."""
    coeffs = [rng.randint(lo, hi) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(lo, hi)
    return UPoly(coeffs + [lead])


def random_nodes(rng: random.Random, count: int, span: int = 15):
    return rng.sample(range(-span, span + 1), count)


def instance_from_poly(q: UPoly, nodes, n: int) -> Instance:
    return Instance(n=n, points=tuple((Fraction(x), abs(q(x))) for x in nodes))
