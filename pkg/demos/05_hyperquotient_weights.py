"""Weight calculus for hyperquotient data.

A hyperquotient datum is a diagonal cyclic action (r; a_1..a_4) with a
character e and the support of an equation f.  Lattice weights in the unit
box evaluate monomials; the discrepancy gap of a weight w is
w(x1 x2 x3 x4) - w(f).  Weights with a gap just below 1 are the interesting
ones, and the five-tuple (a_1..a_4, e) is matched against a fixed list of
classification patterns.
"""

from fractions import Fraction

from mldlab.hyperquot import (HyperquotientDatum, MonomialSupport,
                              classify_type, enumerate_N0, gap_value,
                              identity5_check, psi_classify,
                              semi_invariant_check, support_weight)

# supports are plain sets of exponent vectors; weights evaluate them
S = MonomialSupport.of((1, 1, 0, 0), (0, 0, 2, 0), (0, 0, 0, 5))
w = (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
print(f"weight of the support under (1/2,1/2,1/2,1/2): {support_weight(w, S)}")

# semi-invariance is a per-monomial congruence
d = HyperquotientDatum(4, (1, 3, 2, 1), 0,
                       MonomialSupport.of((1, 1, 0, 0), (0, 0, 0, 3)))
print(f"semi-invariance violator: {semi_invariant_check(d)}")

# the box weights of a class, with primitivity flags
print("\nbox weights for r=4, a=(1,3,2,0):")
for lw in enumerate_N0(4, (1, 3, 2, 0)):
    print(f"  class {lw.class_index}: {tuple(str(c) for c in lw.coords)} "
          f"primitive={lw.primitive}")

# gap partition for a terminal-type datum: nothing lands in the window
d = HyperquotientDatum(5, (2, 3, 1, 0), 0, MonomialSupport.of((1, 1, 0, 0)))
part = psi_classify(d, Fraction(1, 100))
print(f"\ngap partition for {d.r=}, {d.a=}: "
      f"|psi1|={len(part.psi1)} |psi2|={len(part.psi2)} |rest|={len(part.rest)}")
for lw in part.rest[:4]:
    print(f"  gap({tuple(str(c) for c in lw.coords)}) = {gap_value(lw, d)}")

# the five-term congruence identity and the pattern matcher
print(f"\nidentity failures for (11; 3,8,1,0; 0): "
      f"{identity5_check(11, (3, 8, 1, 0), 0)!r}")
for r, a, e in [(11, (3, 8, 1, 0), 0), (8, (1, 5, 3, 2), 2), (9, (4, 5, 8, 1), 8)]:
    tag, param = classify_type(r, a, e)
    print(f"pattern of (r={r}; {a}; {e}): {tag}"
          + (f" with parameter {param}" if param is not None else ""))
