import math
from fractions import Fraction

import pytest


def mld_oracle(r, weights):
    """Reference mld via Fractions and explicit ceilings; independent of the
    integer-residue implementation in the package."""
    if r == 1:
        return Fraction(len(weights))
    best = None
    for k in range(1, r):
        total = Fraction(0)
        for a in weights:
            q = Fraction(a * k, r)
            total += 1 + q - math.ceil(q)
        if best is None or total < best:
            best = total
    return best


def floor_sum_holds(point, n, c):
    """Direct evaluation of the floor constraint at an exact rational point."""
    return sum(math.floor(n * Fraction(v)) for v in point) == n - 1 - c


@pytest.fixture
def rng():
    import random
    return random.Random(20260809)
