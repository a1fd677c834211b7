import itertools
import math
from fractions import Fraction

import pytest

from mldlab.quotient import CyclicQuotient, index_gcd, mld, toroidal_ld
from mldlab.verifiers import (TermTuple, fivefold_scan, fourfold_gap_scan,
                              lift_to_fivefold, terminal_bruteforce,
                              terminal_conclusion, terminal_hypothesis,
                              thm35_hypotheses, transfer_classify,
                              transfer_family_instance)


def fracsum(r, values, j):
    return sum(Fraction(j * v % r, r) for v in values)


def test_terminal_hypothesis_examples():
    assert terminal_hypothesis(TermTuple(5, (2, 3, 1, 0), 0)).ok
    chk = terminal_hypothesis(TermTuple(5, (1, 1, 1, 1), 0))
    assert not chk.ok and chk.failing_j == 1
    # r=7, a=(1,2,5,6), e=0: the identity already fails at j=1
    chk = terminal_hypothesis(TermTuple(7, (1, 2, 5, 6), 0))
    direct_ok = all(
        fracsum(7, (1, 2, 5, 6), j) == Fraction(j, 7) + 1 for j in range(1, 7))
    assert chk.ok == direct_ok is False


def test_terminal_hypothesis_gcd_sides():
    # identity holds but a_1 is not a unit
    chk = terminal_hypothesis(TermTuple(6, (2, 4, 1, 0), 0))
    assert not chk.ok
    # gcd(a4, r) != gcd(e, r) with the identity fine: (a, -a, 1, 0; e=3) on r=6
    chk = terminal_hypothesis(TermTuple(6, (1, 5, 1, 3), 0))
    assert not chk.ok


def test_terminal_conclusion_examples():
    assert terminal_conclusion(TermTuple(5, (2, 3, 1, 0), 0))
    assert terminal_conclusion(TermTuple(7, (1, 3, 4, 2), 2))
    assert terminal_conclusion(TermTuple(4, (1, 1, 3, 2), 2))
    with pytest.raises(ValueError):
        terminal_conclusion(TermTuple(5, (1, 1, 1, 1), 0))


def test_terminal_identity_reassertable(rng):
    # every tuple passing the hypothesis satisfies the identity as exact
    # Fractions, independently of the integer scan
    hits = 0
    for _ in range(4000):
        r = rng.randint(2, 20)
        t = TermTuple(r, tuple(rng.randrange(r) for _ in range(4)), rng.randrange(r))
        if not terminal_hypothesis(t).ok:
            continue
        hits += 1
        for j in range(1, r):
            assert fracsum(r, t.a, j) == Fraction(j * t.e % r, r) + Fraction(j, r) + 1
    assert hits > 0


def test_terminal_bruteforce_small():
    assert terminal_bruteforce(12) == []


def test_terminal_bruteforce_structured_family():
    for r in range(2, 31):
        for a in range(1, r):
            if math.gcd(a, r) != 1:
                continue
            t = TermTuple(r, (a, r - a, 1, 0), 0)
            assert terminal_hypothesis(t).ok
            assert terminal_conclusion(t)


def test_fourfold_scan_small():
    assert fourfold_gap_scan(20) == []


def test_fourfold_oracle_agreement():
    # full Fraction-based enumeration for tiny r: nothing in the gap window
    # survives the twisted-sum hypothesis, matching the scan
    for r in range(2, 15):
        survivors = []
        for b in itertools.combinations_with_replacement(range(1, r), 4):
            alpha1 = sum(Fraction(x, r) for x in b)
            if not Fraction(11, 6) < alpha1 < 2:
                continue
            X = CyclicQuotient(r, b)

            def alpha(n):
                return sum(1 + Fraction(x * n, r) - math.ceil(Fraction(x * n, r))
                           for x in b)

            if all(alpha(n) >= alpha1 for n in range(1, r + 1)):
                survivors.append(b)
        assert survivors == []
    assert fourfold_gap_scan(14) == []


def test_fourfold_known_point_not_candidate():
    # (1/2, 1/3, 1/5, 1/7) has first twisted sum 247/210, below the window
    v = (Fraction(105, 210), Fraction(70, 210), Fraction(42, 210), Fraction(30, 210))
    assert sum(v) == Fraction(247, 210)
    assert not Fraction(11, 6) < sum(v) < 2


def test_transfer_family_case2():
    for (k, m, arr) in [(1, 1, 0), (2, 1, 3), (5, 1, 1), (3, 5, 4)]:
        t, eps = transfer_family_instance(k, m, arr)
        rep = transfer_classify(t, eps)
        assert rep.hypothesis_ok and rep.case_tag == "case2"
        assert rep.gamma
        lo = Fraction(5, 6) + eps
        for kk in rep.gamma:
            assert lo <= Fraction(kk, t.r) < 1


def test_transfer_family_smallest_instance():
    t, eps = transfer_family_instance(1, 1, 0)
    assert (t.r, t.a, t.e) == (7, (5, 4, 6, 2), 2)
    rep = transfer_classify(t, eps)
    assert rep.gamma == (6,)


def test_transfer_case1_via_trivial_character():
    # scaled family weights with a4 = e = 0: Gamma survives and e kills it
    t = TermTuple(7, (5, 4, 6, 0), 0)
    rep = transfer_classify(t, Fraction(1, 100))
    assert rep.hypothesis_ok and rep.case_tag == "case1"
    assert (rep.p, rep.q) == (7, 1)
    assert rep.conclusions["pair_congruence"]
    assert rep.conclusions["gcd_e_r_at_least_7"]
    t2 = TermTuple(13, (11, 10, 6, 0), 0)
    rep2 = transfer_classify(t2, Fraction(1, 100))
    assert rep2.case_tag == "case1" and (rep2.p, rep2.q) == (13, 1)


def test_transfer_hypothesis_failures():
    # weight sum incongruent to e + 1
    rep = transfer_classify(TermTuple(7, (2, 3, 1, 0), 0), Fraction(1, 100))
    assert not rep.hypothesis_ok and "mod r" in rep.failure
    # genuine dichotomy violation (found by exhaustive search): all gcd and
    # congruence hypotheses hold but the excess at k=25 is too small
    rep = transfer_classify(TermTuple(26, (15, 21, 23, 24), 4), Fraction(1, 100))
    assert not rep.hypothesis_ok and rep.failure.startswith("dichotomy")
    assert rep.failure_k == 25
    lhs = fracsum(26, (15, 21, 23, 24), 25)
    ek = Fraction(25 * 4 % 26, 26)
    assert lhs != ek + Fraction(25, 26) and lhs <= ek + 1  # neither branch
    # window violation: family instance with an eps that is too large
    t, _ = transfer_family_instance(1, 1, 0)
    rep = transfer_classify(t, Fraction(1, 7))
    assert not rep.hypothesis_ok and rep.failure_k == 6
    # eps domain
    with pytest.raises(ValueError):
        transfer_classify(t, Fraction(1, 6))
    with pytest.raises(ValueError):
        transfer_classify(t, 0)


def test_transfer_total_on_random_tuples(rng):
    # every tuple yields exactly one of: violation with detail, case1, case2
    for _ in range(800):
        r = rng.randint(2, 30)
        t = TermTuple(r, tuple(rng.randrange(r) for _ in range(4)), rng.randrange(r))
        rep = transfer_classify(t, Fraction(1, 100))
        if rep.hypothesis_ok:
            assert rep.case_tag in ("case1", "case2")
            assert rep.gamma
        else:
            assert rep.case_tag == "violated"
            assert rep.failure


def test_lift_to_fivefold_family(rng):
    for k in (1, 2, 3, 4, 6, 9):
        t, eps = transfer_family_instance(k, 1, rng.randrange(6))
        rep = transfer_classify(t, eps)
        X = lift_to_fivefold(t, eps)
        assert X.dim == 5
        assert X.weights == t.a + ((t.r - t.e) % t.r,)
        k1 = min(kk for kk in rep.gamma if t.e * kk % t.r != 0)
        assert mld(X) == 1 + Fraction(k1, t.r)
        assert toroidal_ld(X, k1) == 1 + Fraction(k1, t.r)


def test_lift_requires_case2():
    with pytest.raises(ValueError):
        lift_to_fivefold(TermTuple(7, (5, 4, 6, 0), 0), Fraction(1, 100))


def test_fivefold_scan_examples():
    cands = fivefold_scan(13, Fraction(1, 100), "4a")
    assert cands
    for c in cands:
        assert index_gcd(c.X) == 1
        assert mld(c.X) == c.mld
        assert Fraction(11, 6) + Fraction(1, 100) <= c.mld < 2
        a = c.X.weights
        assert (a[0] + a[1] + a[4]) % c.X.r == 0
    for cond in ("4a", "4b", "4c"):
        assert fivefold_scan(6, Fraction(1, 100), cond) == []
    with pytest.raises(ValueError):
        fivefold_scan(13, Fraction(1, 100), "4d")


def test_fivefold_scan_4b_congruence():
    for c in fivefold_scan(11, Fraction(1, 100), "4b"):
        a = c.X.weights
        assert (2 * a[3] + a[4]) % c.X.r == 0
        assert math.gcd(a[3], c.X.r) == math.gcd(a[4], c.X.r)


def test_thm35_failure_details():
    ok, detail = thm35_hypotheses(CyclicQuotient(211, (50, 60, 80, 150, 210)), 100)
    assert not ok and detail == "v4 window"
    ok, detail = thm35_hypotheses(CyclicQuotient(211, (50, 60, 80, 1, 150)), 100)
    assert not ok and detail == "v5 window"
    ok, detail = thm35_hypotheses(CyclicQuotient(210, (50, 60, 80, 1, 209)), 100)
    assert not ok and "positive integer" in detail
    ok, detail = thm35_hypotheses(CyclicQuotient(211, (10, 20, 30, 1, 210)), 100)
    assert not ok  # coordinate sum far below the window
    ok, detail = thm35_hypotheses(CyclicQuotient(211, (50, 60, 80, 1, 210)), 99)
    assert not ok and "mu < 100" in detail
    with pytest.raises(ValueError):
        thm35_hypotheses(CyclicQuotient(211, (1, 2, 3)), 100)
    with pytest.raises(ValueError):
        thm35_hypotheses(CyclicQuotient(211, (1, 2, 3, 4, 5)), 1)


def test_thm35_no_instance_at_desk_scale():
    # The window forces the first three weights to form a threefold whose mld
    # equals its coordinate sum, lands in (6/7, 1), and whose weights all
    # have order above 100.  No such threefold exists with r <= 120: values
    # in that window only arise from the accumulation family with k < m <= 5
    # (so r <= 29, orders far too small).  Freeze the negative search.
    from mldlab.spectrum import ScanConfig, scan
    cfg = ScanConfig(dim=3, r_max=120, lo=Fraction(6, 7), hi=Fraction(1),
                     include_lo=False)
    for rec in scan(cfg):
        viable = (sum(rec.weights) * rec.mld.denominator
                  == rec.mld.numerator * rec.r
                  and all(rec.r // math.gcd(a, rec.r) > 100 for a in rec.weights))
        assert not viable
