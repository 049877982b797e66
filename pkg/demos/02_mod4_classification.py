#!/usr/bin/env python3
"""What is the energy of a gcd graph modulo 4?

Energy (the sum of |eigenvalue|) is always an even integer here.  For odd n
it is divisible by 4 outright.  For even n the residue is 2 exactly when
both of these hold:

    n/2 is in the divisor set  AND  the middle eigenvalue lambda_{n/2} < 0

Neither condition alone decides it.  ICG_6({1}) is the graph that kills the
single-condition readings: its middle eigenvalue is -2 < 0, yet E = 8 = 0
(mod 4) because 3 = n/2 is missing from D.
"""

from icgraph import IcgSpec, energy_report, mod4_sweep

print("exhaustive sweep over every divisor set, n = 2..60")
total = 0
for n in range(2, 61):
    summary = mod4_sweep(n)
    total += summary.sets
    assert summary.violations == ()
print(f"  {total} graphs, zero mismatches between residue and prediction")
print()

print("the boundary case, in full:")
rep = energy_report(IcgSpec(6, (1,)))
print(f"  ICG_6({{1}}) is the 6-cycle: energy {rep.energy}")
print(f"  lambda_3 = {rep.lambda_half} (negative!), but 3 not in D -> half_in_D = {rep.half_in_D}")
print(f"  predicted residue {rep.predicted4}, actual residue {rep.residue4}")
assert rep.energy == 8 and rep.residue4 == 0 and rep.lambda_half == -2
print()

print("a residue-2 example needs both conditions:")
rep = energy_report(IcgSpec(6, (1, 3)))
print(f"  ICG_6({{1,3}}) = K_3,3: energy {rep.energy}, lambda_3 = {rep.lambda_half},"
      f" residue {rep.residue4}")
rep = energy_report(IcgSpec(2, (1,)))
print(f"  ICG_2({{1}}) = K_2:   energy {rep.energy}, lambda_1 = {rep.lambda_half},"
      f" residue {rep.residue4}")
