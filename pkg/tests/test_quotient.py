import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import mld_oracle
from mldlab.quotient import (CyclicQuotient, index_gcd, is_isolated, mld,
                             mld_argmin, mld_argmin_batch, toroidal_ld,
                             toroidal_weight)


def test_toroidal_ld_examples():
    X = CyclicQuotient(7, (2, 3, 1))
    assert toroidal_ld(X, 2) == Fraction(12, 7)
    assert toroidal_ld(X, 1) == Fraction(6, 7)
    # the summand hits 1 when r divides a_i * k
    Y = CyclicQuotient(4, (2, 1, 1))
    assert toroidal_ld(Y, 2) == 2


def test_toroidal_ld_range():
    X = CyclicQuotient(7, (2, 3, 1))
    with pytest.raises(IndexError):
        toroidal_ld(X, 0)
    with pytest.raises(IndexError):
        toroidal_ld(X, 7)


def test_toroidal_weight_components(rng):
    for _ in range(200):
        r = rng.randint(2, 40)
        X = CyclicQuotient(r, tuple(rng.randrange(r) for _ in range(3)))
        k = rng.randint(1, r - 1)
        comps = toroidal_weight(X, k)
        assert sum(comps) == toroidal_ld(X, k)
        for c, a in zip(comps, X.weights):
            assert 0 < c <= 1
            assert c == (1 if a * k % r == 0 else Fraction(a * k % r, r))


def test_mld_examples():
    assert mld(CyclicQuotient(7, (2, 3, 1))) == Fraction(6, 7)
    assert mld(CyclicQuotient(2, (1, 1))) == 1
    assert mld(CyclicQuotient(13, (3, 4, 5))) == Fraction(12, 13)
    assert mld(CyclicQuotient(13, (3, 4, 5))) == mld_oracle(13, (3, 4, 5))


def test_mld_smooth_convention():
    assert mld(CyclicQuotient(1, (0, 0, 0))) == 3
    assert mld(CyclicQuotient(1, (0, 0))) == 2


def test_mld_argmin_examples():
    assert mld_argmin(CyclicQuotient(7, (2, 3, 1))) == (1, Fraction(6, 7))
    assert mld_argmin(CyclicQuotient(2, (1, 1))) == (1, Fraction(1))
    assert mld_argmin(CyclicQuotient(13, (3, 4, 5))) == (1, Fraction(12, 13))
    with pytest.raises(ValueError):
        mld_argmin(CyclicQuotient(1, (0, 0, 0)))


def test_is_isolated_and_index_gcd():
    assert is_isolated(CyclicQuotient(13, (3, 4, 5)))
    assert not is_isolated(CyclicQuotient(15, (4, 6, 3)))
    assert is_isolated(CyclicQuotient(7, (2, 3, 1)))
    assert index_gcd(CyclicQuotient(13, (3, 4, 5))) == 1
    assert index_gcd(CyclicQuotient(15, (4, 6, 3))) == 1
    assert index_gcd(CyclicQuotient(6, (2, 2, 2))) == 6


def test_mld_agrees_with_oracle(rng):
    for _ in range(300):
        r = rng.randint(2, 60)
        d = rng.randint(2, 5)
        w = tuple(rng.randrange(r) for _ in range(d))
        X = CyclicQuotient(r, w)
        assert mld(X) == mld_oracle(r, w)
        k, value = mld_argmin(X)
        assert value == mld(X) == toroidal_ld(X, k)


def test_mld_unit_orbit_invariance(rng):
    for _ in range(200):
        r = rng.randint(2, 50)
        w = tuple(rng.randrange(r) for _ in range(3))
        X = CyclicQuotient(r, w)
        units = [u for u in range(1, r) if math.gcd(u, r) == 1]
        u = rng.choice(units)
        assert mld(CyclicQuotient(r, tuple(u * a % r for a in w))) == mld(X)


def test_mld_permutation_invariance(rng):
    for _ in range(200):
        r = rng.randint(2, 50)
        w = [rng.randrange(r) for _ in range(4)]
        X = CyclicQuotient(r, tuple(w))
        rng.shuffle(w)
        assert mld(CyclicQuotient(r, tuple(w))) == mld(X)


def test_mld_bounded_by_dim(rng):
    for _ in range(300):
        r = rng.randint(1, 40)
        d = rng.randint(1, 5)
        w = tuple(rng.randrange(max(r, 1)) for _ in range(d))
        assert mld(CyclicQuotient(r, w)) <= d


def test_du_val_a_type():
    for r in range(2, 31):
        assert mld(CyclicQuotient(r, (1, r - 1))) == 1


def test_opposite_twists_sum_to_integer(rng):
    # ld(k) + ld(r-k) is an integer whenever no a_i * k is divisible by r
    for _ in range(300):
        r = rng.randint(3, 60)
        w = tuple(rng.randrange(1, r) for _ in range(4))
        k = rng.randint(1, r - 1)
        if any(a * k % r == 0 for a in w):
            continue
        X = CyclicQuotient(r, w)
        total = toroidal_ld(X, k) + toroidal_ld(X, r - k)
        assert total.denominator == 1


def test_batch_matches_scalar(rng):
    for _ in range(40):
        r = rng.randint(2, 80)
        d = rng.randint(2, 5)
        rows = [[rng.randrange(r) for _ in range(d)] for _ in range(30)]
        numer, argk = mld_argmin_batch(r, np.asarray(rows))
        for row, num, k in zip(rows, numer, argk):
            X = CyclicQuotient(r, tuple(row))
            assert mld(X) == Fraction(int(num), r)
            assert mld_argmin(X) == (int(k), Fraction(int(num), r))


def test_batch_smooth_point():
    numer, argk = mld_argmin_batch(1, np.zeros((4, 3), dtype=int))
    assert list(numer) == [3, 3, 3, 3]


def test_weights_reduced_mod_r():
    X = CyclicQuotient(7, (9, -1, 14))
    assert X.weights == (2, 6, 0)
    assert X.dim == 3
    assert X.v(0) == Fraction(2, 7)
