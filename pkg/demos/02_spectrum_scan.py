"""Scanning the cyclic-quotient mld spectrum.

The family 1/(6k+m)(2k, 3k, m) has mld (5k+m)/(6k+m), a sequence of values
marching down to 5/6.  A scan over all weight classes shows how the window
just above 5/6 fills in as the group order grows.
"""

from fractions import Fraction

from mldlab import ScanConfig, accumulation_report, distinct_values, family_example, scan

print("accumulation family members:")
for k, m in [(1, 1), (1, 4), (2, 3), (4, 5), (20, 1)]:
    X, value = family_example(k, m)
    print(f"  k={k:2d} m={m}: {X}  mld = {value}")

# every weight class with r <= 40 whose mld lies in (5/6, 1)
cfg = ScanConfig(dim=3, r_max=40, lo=Fraction(5, 6), hi=Fraction(1),
                 include_lo=False)
print("\nclasses with r <= 40 and mld in (5/6, 1):")
for rec in scan(cfg):
    print(f"  r={rec.r:3d} weights={rec.weights} mld={rec.mld} (k={rec.argmin_k})")

# distinct values only, and how the count grows with the scan radius
for r_max in (60, 120):
    values = distinct_values(ScanConfig(dim=3, r_max=r_max, lo=Fraction(5, 6),
                                        hi=Fraction(1), include_lo=False))
    print(f"\n{len(values)} distinct values in (5/6, 1) at r <= {r_max}; "
          f"smallest {values[0]}")

# counting values inside shrinking windows just above 5/6
table = accumulation_report(ScanConfig(dim=3, r_max=120), Fraction(5, 6),
                            [Fraction(1, 12), Fraction(1, 42), Fraction(1, 200)])
print("\nwindow counts above 5/6 at r <= 120:")
for w, count in table:
    print(f"  (5/6, 5/6 + {w}]: {count} values")
