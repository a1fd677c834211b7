"""Minimal log discrepancies of cyclic quotient singularities, exactly.

A quotient 1/r(a_1,...,a_d) carries, for each k in [1, r-1], a toroidal
valuation whose log discrepancy is a sum of fractional parts; the mld is the
minimum over k.  Everything below is exact rational arithmetic.
"""

from mldlab import CyclicQuotient, is_isolated, mld, mld_argmin, toroidal_ld

# The workhorse example: 1/7(2,3,1).  Its twisted log discrepancies:
X = CyclicQuotient(7, (2, 3, 1))
print(f"X = {X}")
for k in range(1, 7):
    print(f"  ld(k={k}) = {toroidal_ld(X, k)}")
print(f"  mld = {mld(X)} attained first at k = {mld_argmin(X)[0]}")

# The extremal threefold: no isolated cyclic quotient has mld in (12/13, 1),
# and 12/13 itself is attained by 1/13(3,4,5).
Y = CyclicQuotient(13, (3, 4, 5))
print(f"\nY = {Y}: isolated = {is_isolated(Y)}, mld = {mld(Y)}")

# Du Val surface points 1/r(1, r-1) all have mld exactly 1:
for r in (2, 3, 5, 8, 13):
    Z = CyclicQuotient(r, (1, r - 1))
    assert mld(Z) == 1
print("\nDu Val points 1/r(1, r-1): mld = 1 for r = 2, 3, 5, 8, 13")

# A smooth point by convention: the empty twist range gives mld = dim.
print(f"smooth 3-fold point: mld = {mld(CyclicQuotient(1, (0, 0, 0)))}")

# mld never exceeds the dimension, and is invariant under the choice of
# group generator (multiplying the weights by any unit mod r):
W = CyclicQuotient(15, (4, 6, 3))
print(f"\nW = {W}: mld = {mld(W)}")
for u in (2, 7, 11):
    Wu = CyclicQuotient(15, tuple(u * a % 15 for a in W.weights))
    print(f"  unit u={u:2d}: {Wu} has mld {mld(Wu)}")
