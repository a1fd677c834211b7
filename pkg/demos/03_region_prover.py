"""Exact emptiness proofs for floor-sum constraint systems.

A pair (n, c) constrains ordered triples v in [0,1)^3 by
floor(n v_1) + floor(n v_2) + floor(n v_3) = n - 1 - c.  An interval (a, b)
of reciprocal gaps contributes the pairs with (c-1)b + 1 <= n <= ca - 1.
The prover refines half-open rational boxes against each constraint and
either kills the region (a certificate of emptiness) or exhibits a point.
"""

from mldlab import regions

# the head interval (13, infinity): eleven constraints, empty by n <= 12
G = regions.gamma_of_interval(13, None, 100)
res = regions.system_empty(regions.unit_cube(ordered_simplex=True), G)
print(f"interval (13, inf): {res.verdict}")
print(f"  constraints applied: {list(res.applied)}")
print(f"  box counts:          {list(res.box_counts)}")

# a weaker system with a genuine member
G = regions.gamma_of_interval(11, None, 100)
res = regions.system_empty(regions.unit_cube(ordered_simplex=True), G)
print(f"\ninterval (11, inf) [not part of the grid]: {res.verdict} "
      f"at {tuple(str(v) for v in res.witness)}")

# the whole 41-interval grid at two constraint caps
for nmax in (100, 120):
    report = regions.verify_s_grid(nmax)
    empty = sum(1 for entry in report if entry["verdict"] == "empty")
    print(f"\ngrid at n <= {nmax}: {empty}/{len(report)} empty")
    for entry in report:
        if entry["verdict"] != "empty":
            print(f"  still inhabited: ({entry['interval'][0]}, "
                  f"{entry['interval'][1]}) witness {entry['witness']}")

# the nested-box induction: refining level l by three constraints yields l+1
print("\nnested-box steps:")
for l in range(4, 8):
    print(f"  level {l} -> {l + 1}: {regions.verify_vl_step(l)}")

# one of the fifty case systems
res = regions.verify_case(4, 1)
print(f"\ncase system (k=4, case 1): {res.verdict}; "
      f"box counts {list(res.box_counts)}")
