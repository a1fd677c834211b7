"""Brute-force lemma checks and the transfer classifier.

Two exhaustive scans (both expected to come back empty), then the transfer
machinery: four weights and a character either violate the hypotheses with a
recorded reason, or fall into one of two cases; case-2 data lifts to a
fivefold quotient whose mld is pinned exactly.
"""

from fractions import Fraction

from mldlab import mld
from mldlab.verifiers import (TermTuple, fivefold_scan, fourfold_gap_scan,
                              lift_to_fivefold, terminal_bruteforce,
                              terminal_conclusion, terminal_hypothesis,
                              transfer_classify, transfer_family_instance)

print("terminal identity scan, r <= 20:",
      len(terminal_bruteforce(20)), "counterexamples")
print("fourfold gap scan, r <= 25:   ",
      len(fourfold_gap_scan(25)), "counterexamples")

# a tuple passing the terminal identity, and its forced pairing structure
t = TermTuple(7, (1, 3, 4, 2), 2)
print(f"\n(7; 1,3,4,2; 2): hypothesis ok = {terminal_hypothesis(t).ok}, "
      f"conclusion = {terminal_conclusion(t)}")

# transfer classification of a family-built case-2 instance
t, eps = transfer_family_instance(3, 1)
rep = transfer_classify(t, eps)
print(f"\nfamily instance r={t.r} a={t.a} e={t.e} (eps={eps}):")
print(f"  case = {rep.case_tag}, Gamma = {rep.gamma}")
X = lift_to_fivefold(t, eps)
print(f"  lift = {X} with mld {mld(X)}")

# trivial character: Gamma is killed by e, landing in case 1
rep = transfer_classify(TermTuple(7, (5, 4, 6, 0), 0), Fraction(1, 100))
print(f"\n(7; 5,4,6,0; 0): case = {rep.case_tag}, p = {rep.p}, q = {rep.q}")

# a hypothesis violation, with the offending index reported
rep = transfer_classify(TermTuple(26, (15, 21, 23, 24), 4), Fraction(1, 100))
print(f"(26; 15,21,23,24; 4): {rep.failure}")

# desk-scale fivefold candidates under the first congruence
cands = fivefold_scan(10, Fraction(1, 100), "4a")
print(f"\nfivefold candidates with r <= 10, condition 4a: {len(cands)}")
for c in cands[:5]:
    print(f"  {c.X}  mld = {c.mld}")
