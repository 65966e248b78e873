"""Shared helpers for the test suite."""

import random
from fractions import Fraction

import pytest

from rosenlab.field import field_new
from rosenlab.rosen import expand, reduce_into_interval


@pytest.fixture
def rng():
    return random.Random(0xD1CE)


def random_reduced_rational(rng, desc, qmax: int = 2000):
    """A random rational p/q translated into the fundamental interval."""
    q = rng.randrange(2, qmax)
    p = rng.randrange(-q, q + 1)
    x, _ = reduce_into_interval(desc.rational(Fraction(p, q)))
    return x


def genuine_word(rng, desc, steps: int = 25):
    """Quotient word of an actual expansion (nonempty)."""
    while True:
        x = random_reduced_rational(rng, desc)
        res = expand(x, max_steps=steps)
        if res.quotients:
            return list(res.quotients), res


FIELDS = {m: field_new(m) for m in (4, 5, 6, 7, 12)}
