"""Brute-force and structured checkers for the arithmetic lemmas.

Four families of checks live here:

* the four-variable congruence identity behind the terminal classification
  (`terminal_hypothesis` / `terminal_conclusion` / `terminal_bruteforce`),
* the fourfold discrepancy-gap scan (`fourfold_gap_scan`),
* the transfer classifier turning four weights plus a character into a
  fivefold quotient (`transfer_classify` / `lift_to_fivefold`), and
* desk-scale fivefold candidate scans (`fivefold_scan`, `thm35_hypotheses`).

The exhaustive scans enumerate with numpy in staged passes (the identity at
j = 1 kills almost every tuple), but every surviving tuple is re-checked with
plain integer arithmetic, and reported results carry exact rationals only.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .qarith import first_fracsum_identity_failure
from .quotient import CyclicQuotient, mld, mld_argmin_batch


@dataclass(frozen=True)
class TermTuple:
    """Residues (a_1..a_4, e) mod r feeding the congruence-identity checkers."""

    r: int
    a: tuple[int, int, int, int]
    e: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("r must be at least 2")
        if len(self.a) != 4:
            raise ValueError("exactly four weights required")
        object.__setattr__(self, "a", tuple(x % self.r for x in self.a))
        object.__setattr__(self, "e", self.e % self.r)


@dataclass(frozen=True)
class HypothesisCheck:
    ok: bool
    reason: str | None = None
    failing_j: int | None = None


def terminal_hypothesis(t: TermTuple) -> HypothesisCheck:
    """Check the identity sum_i {j*a_i/r} = {j*e/r} + j/r + 1 and the gcd sides.

    Returns ok, or the smallest failing j of the identity, or (when the
    identity holds everywhere) the failed gcd condition.
    """
    r = t.r
    j = first_fracsum_identity_failure(r, t.a, t.e)
    if j is not None:
        return HypothesisCheck(False, "identity fails", j)
    for i in range(3):
        if math.gcd(t.a[i], r) != 1:
            return HypothesisCheck(False, f"gcd(a{i + 1}, r) != 1")
    if math.gcd(t.a[3], r) != math.gcd(t.e, r):
        return HypothesisCheck(False, "gcd(a4, r) != gcd(e, r)")
    return HypothesisCheck(True)


def _zero_sum_matching(vals, r) -> bool:
    """Can the six residues be split into three pairs each summing to 0 mod r?"""
    if not vals:
        return True
    first, rest = vals[0], vals[1:]
    for i, other in enumerate(rest):
        if (first + other) % r == 0:
            if _zero_sum_matching(rest[:i] + rest[i + 1:], r):
                return True
    return False


def terminal_conclusion(t: TermTuple) -> bool:
    """The classification the identity forces; requires terminal_hypothesis(t).ok.

    gcd(e, r) > 1: a_4 = e and {a_1, a_2, a_3} splits as a unit 1 plus a pair
    summing to 0 mod r.  gcd(e, r) = 1: appending -e and -1, the six residues
    pair into three zero sums mod r.
    """
    if not terminal_hypothesis(t).ok:
        raise ValueError("tuple does not satisfy the terminal hypothesis")
    r = t.r
    if math.gcd(t.e, r) > 1:
        if (t.a[3] - t.e) % r != 0:
            return False
        for i, j, k in itertools.permutations(range(3)):
            if t.a[i] % r == 1 % r and (t.a[j] + t.a[k]) % r == 0:
                return True
        return False
    vals = list(t.a) + [(-t.e) % r, (-1) % r]
    return _zero_sum_matching(vals, r)


def _terminal_scan_r(r: int) -> list[TermTuple]:
    """Hypothesis-satisfying tuples at level r that violate the conclusion.

    Enumerates a_1 <= a_2 <= a_3 only: the hypothesis and the conclusion are
    both symmetric in the first three residues, so sorted enumeration finds a
    counterexample iff one exists.  Stage one solves the j = 1 identity for e
    (it pins e = a_1+a_2+a_3+a_4 - r - 1); stage two runs the remaining j
    with a shrinking mask; survivors get exact scalar re-checks.
    """
    units = [u for u in range(1, r) if math.gcd(u, r) == 1]
    triples = np.asarray(list(itertools.combinations_with_replacement(units, 3)),
                         dtype=np.int64)
    gcds = np.gcd(np.arange(r, dtype=np.int64), r)
    gcds[0] = r
    a4 = np.arange(r, dtype=np.int64)
    s3 = triples.sum(axis=1)
    # j = 1: e is forced, and must be a residue with gcd(e, r) = gcd(a4, r)
    e = s3[:, None] + a4[None, :] - r - 1
    valid = (e >= 0) & (e < r)
    e_clip = np.where(valid, e, 0)
    valid &= gcds[e_clip] == gcds[a4][None, :]
    ti, ai = np.nonzero(valid)
    cols = np.column_stack([triples[ti], a4[ai], e[ti, ai]])
    for j in range(2, r):
        if not len(cols):
            return []
        lhs = ((cols[:, :4] * j) % r).sum(axis=1)
        rhs = (cols[:, 4] * j) % r + j + r
        cols = cols[lhs == rhs]
    out = []
    for a1, a2, a3, a4v, ev in cols.tolist():
        t = TermTuple(r, (a1, a2, a3, a4v), ev)
        assert terminal_hypothesis(t).ok  # exact scalar re-check of the scan
        if not terminal_conclusion(t):
            out.append(t)
    return out


def terminal_bruteforce(r_max: int, jobs: int = 1) -> list[TermTuple]:
    """Scan all admissible tuples with r <= r_max; expected to return []."""
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    rs = range(2, r_max + 1)
    if jobs <= 1:
        out = []
        for r in rs:
            out.extend(_terminal_scan_r(r))
        return out
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [t for sub in pool.map(_terminal_scan_r, rs) for t in sub]


def _fourfold_scan_r(r: int) -> list[tuple[Fraction, ...]]:
    """Tuples v in (0,1)^4 with denominator r, gap-window first coordinate sum,
    and every twisted sum at least the first one.  Expected none survive."""
    tuples = np.asarray(list(itertools.combinations_with_replacement(range(1, r), 4)),
                        dtype=np.int64)
    s = tuples.sum(axis=1)
    window = (11 * r < 6 * s) & (s < 2 * r)  # alpha_1 in (2 - 1/6, 2)
    cand = tuples[window]
    base = s[window]
    for n in range(2, r):
        if not len(cand):
            return []
        t = (cand * n) % r
        sums = t.sum(axis=1) + (t == 0).sum(axis=1) * r
        keep = sums >= base
        cand, base = cand[keep], base[keep]
    return [tuple(Fraction(int(b), r) for b in row) for row in cand]


def fourfold_gap_scan(r_max: int, jobs: int = 1) -> list[tuple[Fraction, ...]]:
    """Exhaustive denominator-r scan of the fourfold gap window; expected []."""
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    rs = range(2, r_max + 1)
    if jobs <= 1:
        out = []
        for r in rs:
            out.extend(_fourfold_scan_r(r))
        return out
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [v for sub in pool.map(_fourfold_scan_r, rs) for v in sub]


@dataclass(frozen=True)
class TransferReport:
    """Outcome of classifying a TermTuple against the transfer hypotheses."""

    gamma: tuple[int, ...]
    hypothesis_ok: bool
    failure: str | None
    failure_k: int | None
    case_tag: str               # "case1" | "case2" | "violated"
    conclusions: dict | None    # flags for the three lemma conclusions
    p: int | None = None        # gcd(e, r), when case1
    q: int | None = None        # r / p, when case1


def transfer_classify(t: TermTuple, eps) -> TransferReport:
    """Compute Gamma = {k : sum_i {a_i*k/r} = {e*k/r} + k/r} and validate the hypotheses.

    Hypotheses: unit gcds on a_1..a_3, gcd(a4, r) = gcd(e, r), weight sum
    congruent to e + 1, one of the three pair congruences, Gamma nonempty
    with every member in the [5/6 + eps, 1) index window, and every
    non-member k satisfying the strict excess sum_i {a_i*k/r} > {e*k/r} + 1.
    Case 1 means r | e*k for all k in Gamma (p = gcd(e, r) and q = r/p are
    derived); case 2 otherwise.
    """
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 6):
        raise ValueError("eps must lie in (0, 1/6)")
    r, a, e = t.r, t.a, t.e

    def report(failure, failure_k=None, gamma=()):
        return TransferReport(tuple(gamma), False, failure, failure_k,
                              "violated", None)

    for i in range(3):
        if math.gcd(a[i], r) != 1:
            return report(f"gcd(a{i + 1}, r) != 1")
    if math.gcd(a[3], r) != math.gcd(e, r):
        return report("gcd(a4, r) != gcd(e, r)")
    if (sum(a) - e - 1) % r != 0:
        return report("a1+a2+a3+a4 - e != 1 mod r")
    alt1 = (a[0] + a[1] - e) % r == 0
    alt2 = (2 * a[3] - e) % r == 0
    alt3 = (2 * a[0] - e) % r == 0 and math.gcd(e, r) <= 2
    if not (alt1 or alt2 or alt3):
        return report("no pair congruence holds")

    gamma = []
    window_lo = Fraction(5, 6) + eps
    for k in range(1, r):
        lhs = sum(k * x % r for x in a)
        ek = k * e % r
        if lhs == ek + k:
            if Fraction(k, r) < window_lo:
                return report(f"Gamma member k={k} below the index window", k,
                              gamma)
            gamma.append(k)
        elif lhs <= ek + r:
            return report(f"dichotomy fails at k={k}", k, gamma)
    if not gamma:
        return report("Gamma is empty")

    case1 = all(e * k % r == 0 for k in gamma)
    p = math.gcd(e, r)
    conclusions = {
        "pair_congruence": alt2 and not alt1,
        "gcd_e_r": p,
        "gcd_e_r_at_least_7": p >= 7,
        "gamma_killed_by_e": case1,
    }
    if case1:
        return TransferReport(tuple(gamma), True, None, None, "case1",
                              conclusions, p, r // p)
    return TransferReport(tuple(gamma), True, None, None, "case2", conclusions)


def transfer_family_instance(k: int, m: int = 1, arrangement: int = 0):
    """A case-2 transfer tuple built from the family member 1/(6k+m)(2k, 3k, m).

    Scaling the weights by the inverse of k0 = 5k+m moves the minimizing
    index to k0, so every sub-unit log discrepancy of the quotient becomes a
    Gamma member sitting in [5/6 + m/(6r), 1).  Taking e = a_1 + a_2 with
    a_4 = e then satisfies all transfer hypotheses, and e*k0 is never a
    multiple of r, which forces case 2.  Needs m in {1, 5} with gcd(m, k)=1
    so the scaled weights stay units mod r = 6k+m.

    ``arrangement`` in [0, 6) picks which ordered pair of the three scaled
    weights plays (a_1, a_2); each choice is a distinct valid tuple.

    Returns (t, eps) with an eps for which transfer_classify(t, eps) is
    case 2 and lift_to_fivefold applies.
    """
    if m not in (1, 5):
        raise ValueError("only m = 1 and m = 5 keep all weights coprime to r")
    if k < 1 or math.gcd(m, k) != 1:
        raise ValueError("k must be positive with gcd(m, k) = 1")
    r = 6 * k + m
    k0 = 5 * k + m
    u = pow(k0, -1, r)
    b = tuple(u * w % r for w in (2 * k, 3 * k, m))
    assert all(math.gcd(x, r) == 1 for x in b)
    order = list(itertools.permutations(range(3)))[arrangement % 6]
    a1, a2, a3 = (b[i] for i in order)
    e = (a1 + a2) % r
    t = TermTuple(r, (a1, a2, a3, e), e)
    eps = Fraction(m, 7 * r)  # anything below m/(6r) keeps Gamma in the window
    return t, eps


def lift_to_fivefold(t: TermTuple, eps) -> CyclicQuotient:
    """The fivefold quotient 1/r(a_1..a_4, r-e) attached to a case-2 tuple.

    Its mld equals 1 + k_1/r for the least k_1 in Gamma with r not dividing
    e*k_1; the equality is asserted against the exhaustive mld formula.
    """
    rep = transfer_classify(t, eps)
    if rep.case_tag != "case2":
        raise ValueError(f"tuple is not case 2 for eps={eps} (got {rep.case_tag})")
    r = t.r
    X = CyclicQuotient(r, t.a + ((r - t.e) % r,))
    k1 = min(k for k in rep.gamma if t.e * k % r != 0)
    expected = 1 + Fraction(k1, r)
    got = mld(X)
    assert got == expected, (t, k1, got, expected)
    return X


_CONDITIONS = ("4a", "4b", "4c")


@dataclass(frozen=True)
class FivefoldCandidate:
    X: CyclicQuotient
    mld: Fraction


def _fivefold_scan_r(args) -> list[FivefoldCandidate]:
    r, eps, condition = args
    units = [u for u in range(1, r) if math.gcd(u, r) == 1]
    if not units:
        return []
    u = np.asarray(units, dtype=np.int64)
    gcds = np.gcd(np.arange(r, dtype=np.int64), r)
    gcds[0] = r
    lo = Fraction(11, 6) + Fraction(eps)
    out = []
    for a1v in units:  # slab over a_1 keeps the grids small
        grids = np.meshgrid(u, u, np.arange(r, dtype=np.int64), indexing="ij")
        a2, a3, a4 = (g.ravel() for g in grids)
        a1 = np.full_like(a2, a1v)
        if condition == "4a":
            a5 = (-(a1 + a2)) % r
        elif condition == "4b":
            a5 = (-2 * a4) % r
        else:
            a5 = (-2 * a1) % r
        keep = gcds[a4] == gcds[a5]
        if condition == "4c":
            keep &= gcds[a4] <= 2
        total = a1 + a2 + a3 + a4 + a5
        keep &= np.gcd(total, r) == 1
        W = np.column_stack([a1, a2, a3, a4, a5])[keep]
        if not len(W):
            continue
        numer, _ = mld_argmin_batch(r, W)
        sel = (numer * lo.denominator >= lo.numerator * r) & (numer < 2 * r)
        for row, num in zip(W[sel], numer[sel]):
            X = CyclicQuotient(r, tuple(int(x) for x in row))
            value = Fraction(int(num), r)
            assert mld(X) == value  # revalidate the batch result exactly
            out.append(FivefoldCandidate(X, value))
    return out


def fivefold_scan(r_max: int, eps, condition: str, jobs: int = 1) -> list[FivefoldCandidate]:
    """Enumerate fivefold quotients passing the gcd/congruence hypotheses with
    mld in [11/6 + eps, 2).  The chosen congruence determines a_5, so the
    enumeration runs over (a_1, a_2, a_3, a_4) only."""
    if condition not in _CONDITIONS:
        raise ValueError(f"condition must be one of {_CONDITIONS}")
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 6):
        raise ValueError("eps must lie in (0, 1/6)")
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    tasks = [(r, eps, condition) for r in range(2, r_max + 1)]
    if jobs <= 1:
        out = []
        for task in tasks:
            out.extend(_fivefold_scan_r(task))
        return out
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [c for sub in pool.map(_fivefold_scan_r, tasks) for c in sub]


def thm35_hypotheses(X: CyclicQuotient, mu: int) -> tuple[bool, str]:
    """Check the window hypotheses at sharpness level mu.

    Requires dim 5.  The level k is the largest non-negative integer with
    60k + 100 <= mu; the checks are v_4 < 1/mu, v_5 > 1 - 1/mu, no n <= mu
    with n*v_i integral, and the mld equal to the coordinate sum inside
    (1 + (5k+6)/(6k+7), 2).
    """
    if X.dim != 5:
        raise ValueError("a dimension-5 quotient is required")
    if mu < 2:
        raise ValueError("mu must be at least 2")
    if mu < 100:
        return False, "mu < 100 admits no level k with 60k + 100 <= mu"
    k = (mu - 100) // 60
    r = X.r
    for i, a in enumerate(X.weights):
        if a == 0:
            return False, f"v_{i + 1} = 0"
        order = r // math.gcd(a, r)
        if order <= mu:
            return False, f"n*v_{i + 1} is a positive integer at n={order}"
    v = [Fraction(a, r) for a in X.weights]
    if not v[3] < Fraction(1, mu):
        return False, "v4 window"
    if not v[4] > 1 - Fraction(1, mu):
        return False, "v5 window"
    total = sum(v)
    if mld(X) != total:
        return False, "mld is not attained by the coordinate sum"
    lo = 1 + Fraction(5 * k + 6, 6 * k + 7)
    if not lo < total < 2:
        return False, f"mld outside ({lo}, 2)"
    return True, "ok"
