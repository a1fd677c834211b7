"""Exact rational helpers and the elementary counting facts used by the scanners.

Everything here is pure integer / `fractions.Fraction` arithmetic; no floats.
"""

from __future__ import annotations

import math
from fractions import Fraction

# The single rational type used across the package.  Arbitrary precision,
# always stored reduced with a positive denominator.
Rat = Fraction


def frac(q) -> Fraction:
    """Fractional part {q} in [0, 1), defined via the mathematical floor.

    frac(7/3) == 1/3, frac(-1/4) == 3/4, frac(3) == 0.
    """
    q = Fraction(q)
    return q - math.floor(q)


def consecutive_integers(a, b, odd_only: bool = False):
    """Integers (odd integers when ``odd_only``) strictly inside the open interval (a, b).

    Returns ``(count, witness)`` with the witness list in increasing order.
    The interval always contains at least ceil(b-a)-1 consecutive integers,
    and at least ceil(b-a)/2 - 1 consecutive odd ones; whenever that lower
    bound is non-negative it is asserted here.
    """
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ValueError(f"empty interval ({a}, {b})")
    lo = math.floor(a) + 1
    hi = math.ceil(b) - 1
    witness = list(range(lo, hi + 1))
    if odd_only:
        witness = [n for n in witness if n % 2 != 0]
        bound = Fraction(math.ceil(b - a), 2) - 1
    else:
        bound = Fraction(math.ceil(b - a) - 1)
    count = len(witness)
    if bound >= 0:
        assert count >= bound, (a, b, odd_only, count, bound)
    return count, witness


def count_nondivisible(start: int, k: int, p: int):
    """Count s in [start, start+k-1] with p not dividing s nor s+1.

    Returns ``(size, bound)`` where bound = (k-2)(p-2)/p; the inequality
    size >= bound is asserted (it is vacuous for k < 2, where the bound is
    negative).
    """
    if p < 3:
        raise ValueError("p must be at least 3")
    if k < 1:
        raise ValueError("k must be at least 1")
    size = sum(1 for s in range(start, start + k) if s % p != 0 and (s + 1) % p != 0)
    bound = Fraction((k - 2) * (p - 2), p)
    assert size >= bound, (start, k, p, size, bound)
    return size, bound


def fracsum_identity_failures(r: int, weights, e: int) -> list[int]:
    """All j in [1, r-1] violating sum_i {j*w_i/r} == {j*e/r} + j/r + 1.

    Pure integer check: multiplying through by r, the identity reads
    sum_i ((j*w_i) mod r) == (j*e mod r) + j + r.
    """
    e %= r
    ws = [w % r for w in weights]
    return [j for j in range(1, r)
            if sum(j * w % r for w in ws) != (j * e) % r + j + r]


def first_fracsum_identity_failure(r: int, weights, e: int):
    """Smallest failing j of the identity above, or None if it holds for all j."""
    e %= r
    ws = [w % r for w in weights]
    for j in range(1, r):
        if sum(j * w % r for w in ws) != (j * e) % r + j + r:
            return j
    return None
