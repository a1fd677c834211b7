"""Cyclic quotient singularities and their toric minimal log discrepancy.

A quotient 1/r(a_1, ..., a_d) is the quotient of affine d-space by the cyclic
group of order r acting diagonally with the given weight residues.  Its mld is
the minimum over k in [1, r-1] of the log discrepancies

    ld(k) = sum_i (1 + a_i*k/r - ceil(a_i*k/r)),

each summand being {a_i*k/r} when r does not divide a_i*k and 1 when it does.
Multiplying through by r turns ld(k) into the integer

    r * ld(k) = sum_i ((a_i*k) mod r, with 0 read as r),

so the whole computation runs in exact integer arithmetic.  `mld` and
`toroidal_ld` are the per-instance reference implementations;
`mld_argmin_batch` evaluates the same integer formula over numpy arrays for
the large enumeration scans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


@dataclass(frozen=True)
class CyclicQuotient:
    """The quotient singularity 1/r(a_1, ..., a_d), weights reduced mod r."""

    r: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("group order r must be a positive integer")
        if len(self.weights) < 1:
            raise ValueError("at least one weight is required")
        object.__setattr__(self, "weights", tuple(w % self.r for w in self.weights))

    @property
    def dim(self) -> int:
        return len(self.weights)

    def v(self, i: int) -> Fraction:
        """v_i = a_i / r, a rational in [0, 1)."""
        return Fraction(self.weights[i], self.r)

    def __str__(self):
        return f"1/{self.r}({','.join(str(w) for w in self.weights)})"


def _ld_numerator(r: int, weights, k: int) -> int:
    # r times the log discrepancy of the k-th toroidal weight
    return sum((w * k) % r or r for w in weights)


def toroidal_weight(X: CyclicQuotient, k: int) -> tuple[Fraction, ...]:
    """Component vector (1 + a_i*k/r - ceil(a_i*k/r))_i of the k-th toroidal weight.

    Each component lies in (0, 1]: the fractional part {a_i*k/r} when r does
    not divide a_i*k, and 1 when it does.
    """
    if not 1 <= k <= X.r - 1:
        raise IndexError(f"k must lie in [1, {X.r - 1}], got {k}")
    return tuple(Fraction((w * k) % X.r or X.r, X.r) for w in X.weights)


def toroidal_ld(X: CyclicQuotient, k: int) -> Fraction:
    """Log discrepancy sum_i (1 + a_i*k/r - ceil(a_i*k/r)) of the k-th toroidal weight."""
    if not 1 <= k <= X.r - 1:
        raise IndexError(f"k must lie in [1, {X.r - 1}], got {k}")
    return Fraction(_ld_numerator(X.r, X.weights, k), X.r)


def mld(X: CyclicQuotient) -> Fraction:
    """Minimal log discrepancy of X at the origin.

    For r = 1 the point is smooth and the ordinary blow-up gives mld = dim;
    otherwise the minimum of toroidal_ld over k in [1, r-1].  Always <= dim.
    """
    if X.r == 1:
        return Fraction(X.dim)
    best = min(_ld_numerator(X.r, X.weights, k) for k in range(1, X.r))
    return Fraction(best, X.r)


def mld_argmin(X: CyclicQuotient) -> tuple[int, Fraction]:
    """The smallest k attaining the mld, together with the value.

    Requires r >= 2: the smooth point r = 1 carries no toroidal valuation
    with an index.
    """
    if X.r < 2:
        raise ValueError("no toroidal valuation index exists for r = 1")
    best_k, best = 1, _ld_numerator(X.r, X.weights, 1)
    for k in range(2, X.r):
        s = _ld_numerator(X.r, X.weights, k)
        if s < best:
            best_k, best = k, s
    return best_k, Fraction(best, X.r)


def is_isolated(X: CyclicQuotient) -> bool:
    """True iff every weight is coprime to r (the quotient map is free off the origin)."""
    return all(math.gcd(w, X.r) == 1 for w in X.weights)


def index_gcd(X: CyclicQuotient) -> int:
    """gcd of the weight sum with r; equal to 1 exactly when r is the Gorenstein index."""
    return math.gcd(sum(X.weights), X.r)


_INT64_R_LIMIT = 3_000_000_000  # k*a < r**2 must stay below 2**63


def mld_argmin_batch(r: int, weights_matrix) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized mld over many weight tuples sharing one denominator r.

    ``weights_matrix`` is an (N, d) integer array of residues mod r.  Returns
    ``(numer, argk)`` int64 arrays: the mld of row i is numer[i]/r, first
    attained at k = argk[i].  Same integer formula as `mld`, so the results
    are exact; int64 intermediates are safe for any r below 3e9.
    """
    W = np.ascontiguousarray(np.asarray(weights_matrix, dtype=np.int64) % r)
    n, d = W.shape
    if r == 1:
        return np.full(n, d, dtype=np.int64), np.zeros(n, dtype=np.int64)
    if r > _INT64_R_LIMIT:
        raise OverflowError(f"r = {r} exceeds the int64-safe batch limit")
    best = np.full(n, d * r, dtype=np.int64)  # ld(k) <= d for every k
    argk = np.full(n, 1, dtype=np.int64)
    buf = np.empty_like(W)
    for k in range(1, r):
        np.multiply(W, k, out=buf)
        np.mod(buf, r, out=buf)
        s = buf.sum(axis=1)
        zeros = (buf == 0).sum(axis=1)
        if zeros.any():
            s += zeros * r
        better = s < best
        if better.any():
            best[better] = s[better]
            argk[better] = k
    return best, argk
